#include "octaharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "octaharm/coxeter.hpp"
#include "octaharm/exports.hpp"
#include "octaharm/harmonics.hpp"
#include "octaharm/projection.hpp"
#include "octaharm/tables.hpp"

namespace octaharm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Runner {
  CheckReport& report;
  std::set<std::string>& covered;

  void run(const std::string& name, const std::vector<std::string>& tables,
           double tol, const std::function<double()>& residual_fn) {
    CheckReport::Item item;
    item.name = name;
    try {
      item.residual = residual_fn();
      item.pass = item.residual <= tol;
    } catch (const std::exception& e) {
      item.pass = false;
      item.residual = kInf;
      item.detail = e.what();
    }
    report.items.push_back(std::move(item));
    for (const auto& t : tables) covered.insert(t);
  }
};

const char* generator_table_name(ManifoldId m) {
  switch (m) {
    case ManifoldId::N4: return "4.1";
    case ManifoldId::N5: return "5.1";
    case ManifoldId::N6: return "6.1";
  }
  return "?";
}

double exact(bool ok) { return ok ? 0.0 : 1.0; }

}  // namespace

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const auto& item : checks.items) {
    out << item.name << ": " << (item.pass ? "PASS" : "FAIL");
    if (std::isfinite(item.residual)) {
      out << " (max residual " << format_double(item.residual, 3) << ")";
    }
    if (!item.detail.empty()) out << " -- " << item.detail;
    out << '\n';
  }
  out << "---\n";
  out << "reference tables covered:";
  for (const auto& t : tables_covered) out << ' ' << t;
  out << '\n';
  out << "coverage complete: " << (coverage_complete ? "yes" : "no") << '\n';
  out << "overall: " << (all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

VerifyReport run_verification(const VerifyOptions& opts) {
  VerifyReport result;
  std::set<std::string> covered;
  Runner runner{result.checks, covered};

  // --- mirror table and Coxeter group ---------------------------------------
  runner.run("table 2.1 mirror constants", {"2.1"}, 1e-15, [] {
    double res = 0.0;
    for (const WeylReflection& w : weyl_table()) {
      res = std::max(res, std::abs(w.vector.norm() - 1.0));
      res = std::max(res, w.spinor.distance(point_to_spinor(w.vector)));
    }
    return res;
  });

  runner.run("G order 1152", {}, 0.0, [&opts] {
    const auto closure = close_group({reflection_matrix(1), reflection_matrix(2),
                                      reflection_matrix(3), reflection_matrix(4)});
    return std::abs(static_cast<double>(closure.order()) - 1152.0);
  });

  runner.run("O order 48", {}, 0.0, [] {
    const auto closure = close_group(
        {reflection_matrix(1), reflection_matrix(2), reflection_matrix(3)});
    return std::abs(static_cast<double>(closure.order()) - 48.0);
  });

  runner.run("rotation orders (W1W2)^3 and (W2W3)^4", {}, opts.table_tol, [] {
    const RotationPair r12 = rotation_pair(1, 2);
    const RotationPair r23 = rotation_pair(2, 3);
    const double a = (r12 * r12 * r12).distance(RotationPair());
    const double b = (r23 * r23 * r23 * r23).distance(RotationPair());
    return std::max(a, b);
  });

  runner.run("pair conversion vs mirror products (20 ordered pairs)", {},
             opts.table_tol, [] {
               double res = 0.0;
               for (int i = 0; i < 5; ++i)
                 for (int j = 0; j < 5; ++j) {
                   if (i == j) continue;
                   const Eigen::Matrix4d a = rotation_pair(i, j).to_so4();
                   const Eigen::Matrix4d b =
                       reflection_matrix(j) * reflection_matrix(i);
                   res = std::max(res, (a - b).cwiseAbs().maxCoeff());
                 }
               return res;
             });

  runner.run("24-cell vertex orbit equals table 6.2 points", {"6.2"}, kBasisTol, [] {
    const auto closure = close_group({reflection_matrix(1), reflection_matrix(2),
                                      reflection_matrix(3), reflection_matrix(4)});
    const Eigen::Vector4d seed(1.0, 0.0, 0.0, 0.0);
    std::vector<Eigen::Vector4d> orbit;
    for (const auto& m : closure.elements()) {
      const Eigen::Vector4d img = m * seed;
      bool known = false;
      for (const auto& o : orbit)
        if ((o - img).cwiseAbs().maxCoeff() < 1e-6) { known = true; break; }
      if (!known) orbit.push_back(img);
    }
    if (orbit.size() != 24) return kInf;
    double res = 0.0;
    for (const Point4& p : tables::t24_points()) {
      double best = kInf;
      for (const auto& o : orbit)
        best = std::min(best, (o - p.vector()).cwiseAbs().maxCoeff());
      res = std::max(res, best);
    }
    return res;
  });

  runner.run("inversion J4 in G and central", {}, opts.table_tol, [] {
    const auto closure = close_group({reflection_matrix(1), reflection_matrix(2),
                                      reflection_matrix(3), reflection_matrix(4)});
    if (!closure.contains(-Eigen::Matrix4d::Identity())) return kInf;
    const Eigen::Matrix4d j4 = RotationPair::inversion().to_so4();
    double res = (j4 + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
    const Eigen::Matrix4d sample = rotation_pair(1, 2).to_so4();
    res = std::max(res, (j4 * sample - sample * j4).cwiseAbs().maxCoeff());
    return res;
  });

  // --- per-manifold checks ---------------------------------------------------
  const auto g1152 = close_group({reflection_matrix(1), reflection_matrix(2),
                                  reflection_matrix(3), reflection_matrix(4)});

  for (ManifoldId m : opts.manifolds) {
    const std::string tag = std::string("(") + to_string(m) + ")";
    const std::string gen_table = generator_table_name(m);

    runner.run("table " + gen_table + " generators " + tag, {gen_table},
               opts.table_tol, [m, &opts] {
                 const auto words = generator_words(m);
                 auto expected = tables::expected_generators(m);
                 if (opts.fault == FaultInjection::Table61Alpha1 &&
                     m == ManifoldId::N6) {
                   // Corrupted stored alpha1 fixture: swap in a wrong matrix.
                   expected[0] = RotationPair(
                       tables::named_spinor(tables::kAlpha2Inv), UnitSpinor());
                 }
                 double res = 0.0;
                 for (int k = 0; k < 4; ++k) {
                   res = std::max(res,
                                  evaluate_word(words[k]).distance(expected[k]));
                 }
                 return res;
               });

    DeckGroup deck = build_deck_group(m);

    runner.run("deck closure order 24 " + tag, {}, 0.0, [&deck] {
      return std::abs(static_cast<double>(deck.elements().size()) - 24.0);
    });

    runner.run("centers distinct and on table 6.2 points " + tag, {"6.2"},
               opts.basis_tol, [&deck] {
                 const auto centers = center_positions(deck);
                 double res = 0.0;
                 for (const Point4& c : centers) {
                   double best = kInf;
                   for (const Point4& p : tables::t24_points())
                     best = std::min(best, c.distance(p));
                   res = std::max(res, best);
                 }
                 return res;
               });

    runner.run("generator adjacency (centers at angle pi/3) " + tag, {},
               opts.table_tol, [&deck] {
                 double res = 0.0;
                 for (const RotationPair& g : deck.generators()) {
                   const UnitSpinor center = g.left().adjoint() * g.right();
                   res = std::max(res, std::abs(std::abs(center.half_trace()) - 0.5));
                 }
                 return res;
               });

    runner.run("free action (20 seeded points) " + tag, {}, 0.0,
               [&deck, &opts] {
                 std::mt19937_64 rng(opts.seed);
                 std::vector<UnitSpinor> points;
                 for (int k = 0; k < 20; ++k)
                   points.push_back(UnitSpinor::random(rng));
                 double min_move = kInf;
                 for (const DeckElement& el : deck.elements()) {
                   if (el.pair.is_identity()) continue;
                   for (const UnitSpinor& u : points)
                     min_move = std::min(min_move, el.pair.act(u).distance(u));
                 }
                 return min_move > 1e-6 ? 0.0 : 1.0;
               });

    runner.run("deck elements lie in G " + tag, {}, 0.0, [&deck, &g1152] {
      for (const DeckElement& el : deck.elements())
        if (!g1152.contains(el.pair.to_so4())) return 1.0;
      return 0.0;
    });

    if (m == ManifoldId::N6) {
      const CheckReport t24 = verify_t24_tables(deck, /*throw_on_failure=*/false);
      for (auto item : t24.items) {
        item.name += " " + tag;
        result.checks.items.push_back(item);
      }
      covered.insert("6.2");
      covered.insert("6.3");

      runner.run("identified as binary tetrahedral " + tag, {}, 0.0, [&deck] {
        return exact(identify_group(deck).matched_template ==
                     "binary_tetrahedral_2_3_3");
      });
    }

    if (m == ManifoldId::N4) {
      const CheckReport structure =
          verify_n4_structure(deck, /*throw_on_failure=*/false);
      for (auto item : structure.items) {
        item.name += " " + tag;
        result.checks.items.push_back(item);
      }
      covered.insert("4.2");

      runner.run("table 4.2 element set " + tag, {"4.2"}, opts.table_tol,
                 [&deck] {
                   double res = 0.0;
                   for (const RotationPair& p : tables::n4_element_pairs()) {
                     const auto idx = deck.index_of(p);
                     if (!idx) return kInf;
                     res = std::max(res, deck.element(*idx).distance(p));
                   }
                   return res;
                 });

      runner.run("identified as C3 x Q8 " + tag, {}, 0.0, [&deck] {
        return exact(identify_group(deck).matched_template == "c3_x_q8");
      });

      runner.run("frame diagonalization constants (N4)", {}, opts.table_tol, [] {
        const Diagonalizer diag = n4_diagonalizer();  // validates on build
        const Eigen::Matrix2cd gen = -tables::named_spinor(tables::kAlpha2).matrix();
        Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
        expected(0, 0) = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
        expected(1, 1) = std::polar(1.0, -2.0 * std::acos(-1.0) / 3.0);
        return (diag.matrix().adjoint() * gen * diag.matrix() - expected)
            .cwiseAbs()
            .maxCoeff();
      });

      runner.run("table 4.3 closed form vs projector (j <= 4) " + tag, {"4.3"},
                 0.0, [&deck] {
                   for (int two_j = 0; two_j <= 8; two_j += 2) {
                     const Spin j(two_j);
                     const InvariantBasis numeric = invariant_basis(j, deck);
                     const InvariantBasis closed =
                         to_original_frame(n4_closed_form_basis(j));
                     if (!compare_spans(numeric, closed)) return 1.0;
                     if (n4_closed_form_count(j) != multiplicity(j, deck))
                       return 1.0;
                   }
                   return 0.0;
                 });
    }

    if (m == ManifoldId::N5) {
      runner.run("table 5.2 element set " + tag, {"5.2"}, opts.table_tol,
                 [&deck] {
                   double res = 0.0;
                   for (const RotationPair& p : tables::n5_element_pairs()) {
                     const auto idx = deck.index_of(p);
                     if (!idx) return kInf;
                     res = std::max(res, deck.element(*idx).distance(p));
                   }
                   return res;
                 });

      runner.run("table 5.2 centers " + tag, {"5.2"}, opts.table_tol, [] {
        double res = 0.0;
        for (const tables::N5Row& row : tables::n5_rows()) {
          const UnitSpinor plus_center = row.left.adjoint() * row.right_plus;
          res = std::max(res, plus_center.distance(row.center_plus.spinor()));
          const UnitSpinor minus_center =
              row.left.adjoint() * row.right_plus.negated();
          res = std::max(res,
                         minus_center.distance(row.center_plus.spinor().negated()));
        }
        return res;
      });

      runner.run("group invariants reported " + tag, {}, 0.0, [&deck] {
        const GroupDescriptor desc = identify_group(deck);
        int total = 0;
        for (const auto& [order, count] : desc.order_histogram) total += count;
        return exact(total == 24 && desc.order_histogram.at(1) == 1);
      });
    }

    runner.run("multiplicity equals projector rank (two_j <= 8) " + tag, {},
               0.0, [&deck] {
                 for (int two_j = 0; two_j <= 8; ++two_j) {
                   const Spin j(two_j);
                   // invariant_basis cross-validates rank vs multiplicity.
                   const InvariantBasis basis = invariant_basis(j, deck);
                   if (basis.count() != multiplicity(j, deck)) return 1.0;
                 }
                 return 0.0;
               });
  }

  // --- cross-manifold centers ------------------------------------------------
  if (opts.manifolds.size() >= 2) {
    runner.run("center sets match across manifolds", {}, 0.0, [&opts] {
      for (std::size_t a = 0; a < opts.manifolds.size(); ++a) {
        for (std::size_t b = a + 1; b < opts.manifolds.size(); ++b) {
          const DeckGroup da = build_deck_group(opts.manifolds[a]);
          const DeckGroup db = build_deck_group(opts.manifolds[b]);
          if (!compare_center_sets(da, db)) return 1.0;
        }
      }
      return 0.0;
    });
  }

  // --- representation spot checks ---------------------------------------------
  runner.run("representation unitarity and homomorphism (j <= 3)", {}, 1e-10,
             [&opts] {
               std::mt19937_64 rng(opts.seed + 1);
               double res = 0.0;
               for (int two_j = 0; two_j <= 6; ++two_j) {
                 const Spin j(two_j);
                 for (int trial = 0; trial < 5; ++trial) {
                   const UnitSpinor u = UnitSpinor::random(rng);
                   const UnitSpinor v = UnitSpinor::random(rng);
                   const Eigen::MatrixXcd du = wigner_d(j, u);
                   const Eigen::MatrixXcd dv = wigner_d(j, v);
                   res = std::max(res, (du.adjoint() * du -
                                        Eigen::MatrixXcd::Identity(j.dim(), j.dim()))
                                           .cwiseAbs()
                                           .maxCoeff());
                   res = std::max(
                       res, (wigner_d(j, u * v) - du * dv).cwiseAbs().maxCoeff());
                 }
               }
               return res;
             });

  result.tables_covered.assign(covered.begin(), covered.end());
  const std::set<std::string> full{"2.1", "4.1", "4.2", "4.3", "5.1",
                                   "5.2", "6.1", "6.2", "6.3"};
  result.coverage_complete = covered == full;
  return result;
}

}  // namespace octaharm
