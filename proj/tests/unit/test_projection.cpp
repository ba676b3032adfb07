#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "octaharm/projection.hpp"
#include "octaharm/tables.hpp"

using namespace octaharm;

namespace {

complexd evaluate_poly_general(const Eigen::VectorXcd& coeff, Spin j,
                               const Eigen::Matrix2cd& arg) {
  const Eigen::MatrixXcd d = wigner_d_general(j, arg);
  complexd sum(0, 0);
  for (int r = 0; r < j.dim(); ++r)
    for (int c = 0; c < j.dim(); ++c) sum += coeff[r * j.dim() + c] * d(r, c);
  return sum;
}

}  // namespace

TEST_CASE("projector: trivial spin, idempotence, self-adjointness") {
  for (ManifoldId m : kAllManifolds) {
    const DeckGroup d = build_deck_group(m);
    const Eigen::MatrixXcd p0 = projector(Spin(0), d);
    CHECK(p0.rows() == 1);
    CHECK(std::abs(p0(0, 0) - complexd(1, 0)) < 1e-12);

    for (int two_j = 0; two_j <= 8; two_j += 2) {
      const Eigen::MatrixXcd p = projector(Spin(two_j), d);
      CHECK((p * p - p).cwiseAbs().maxCoeff() < kBasisTol);
      CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("projector vanishes at half-integer spin") {
  const DeckGroup n6 = build_deck_group(ManifoldId::N6);
  for (int two_j : {1, 3, 5}) {
    CHECK(projector(Spin(two_j), n6).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("projector intertwines every group action") {
  for (ManifoldId m : kAllManifolds) {
    const DeckGroup d = build_deck_group(m);
    for (int two_j : {2, 3, 4, 6, 8, 10, 12}) {
      const Spin j(two_j);
      const Eigen::MatrixXcd p = projector(j, d);
      for (std::size_t k = 0; k < d.elements().size(); ++k) {
        const Eigen::MatrixXcd action = pair_action(j, d.element(k));
        CHECK((action * p - p).cwiseAbs().maxCoeff() < kBasisTol);
      }
    }
  }
}

TEST_CASE("invariant_basis: rank, orthonormality, invariance") {
  for (ManifoldId m : kAllManifolds) {
    const DeckGroup d = build_deck_group(m);
    const InvariantBasis b0 = invariant_basis(Spin(0), d);
    CHECK(b0.count() == 1);

    for (int two_j = 0; two_j <= 12; ++two_j) {
      const Spin j(two_j);
      const InvariantBasis basis = invariant_basis(j, d);
      CHECK(basis.count() == multiplicity(j, d));
      if (basis.count() == 0) continue;

      const Eigen::MatrixXcd gram = basis.vectors.adjoint() * basis.vectors;
      CHECK((gram - Eigen::MatrixXcd::Identity(basis.count(), basis.count()))
                .cwiseAbs()
                .maxCoeff() < 1e-10);

      for (std::size_t k = 0; k < d.elements().size(); k += 7) {
        const Eigen::MatrixXcd action = pair_action(j, d.element(k));
        CHECK((action * basis.vectors - basis.vectors).cwiseAbs().maxCoeff() <
              kBasisTol);
      }
    }
  }
}

TEST_CASE("N4 odd spins below 3 have empty bases") {
  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  CHECK(invariant_basis(Spin(2), n4).count() == 0);  // j = 1
}

TEST_CASE("frame rotation constants validate") {
  const Diagonalizer diag = n4_diagonalizer();
  const Eigen::Matrix2cd c = diag.matrix();

  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  CHECK(((c.adjoint() * c) - id).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::Matrix2cd gen = -tables::named_spinor(tables::kAlpha2).matrix();
  Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
  expected(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  expected(1, 1) = std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
  CHECK((c.adjoint() * gen * c - expected).cwiseAbs().maxCoeff() < 1e-12);

  // det c = exp(-i pi/4): unit modulus with recorded phase
  const complexd det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
  CHECK(std::abs(det - std::polar(1.0, -std::numbers::pi / 4.0)) < 1e-12);

  // the unit-determinant companion is special-unitary and diagonalizes too
  const UnitSpinor cs = diag.unit_spinor();
  CHECK((cs.matrix().adjoint() * gen * cs.matrix() - expected).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("closed-form enumeration follows the selection rules") {
  CHECK_THROWS_AS(n4_closed_form_basis(Spin(1)), DomainError);

  CHECK(n4_closed_form_basis(Spin(2)).count() == 0);  // j = 1

  const InvariantBasis j2 = n4_closed_form_basis(Spin(4));
  REQUIRE(j2.count() == 2);
  CHECK(j2.labels[0].rho == 0);
  CHECK(j2.labels[0].m2 == 0);
  CHECK(j2.labels[0].kind == BasisLabel::Kind::Singlet);
  CHECK(j2.labels[1].rho == 0);
  CHECK(j2.labels[1].m2 == 2);
  CHECK(j2.labels[1].kind == BasisLabel::Kind::Plus);

  const InvariantBasis j3 = n4_closed_form_basis(Spin(6));
  REQUIRE(j3.count() == 3);
  for (const BasisLabel& lab : j3.labels) {
    CHECK(lab.m2 == 2);
    CHECK(lab.kind == BasisLabel::Kind::Minus);
  }
  CHECK(j3.labels[0].rho == -3);
  CHECK(j3.labels[1].rho == 0);
  CHECK(j3.labels[2].rho == 3);

  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  for (int jj = 0; jj <= 8; ++jj) {
    CHECK(n4_closed_form_count(Spin(2 * jj)) == multiplicity(Spin(2 * jj), n4));
  }
}

TEST_CASE("closed-form span equals the numeric projector span") {
  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  for (int jj = 0; jj <= 6; ++jj) {
    const Spin j(2 * jj);
    const InvariantBasis numeric = invariant_basis(j, n4);
    const InvariantBasis closed = to_original_frame(n4_closed_form_basis(j));
    std::string why;
    CHECK_MESSAGE(compare_spans(numeric, closed, kSpanTol, &why), why);
  }
}

TEST_CASE("compare_spans: reflexivity and dimension mismatch") {
  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  const InvariantBasis b = invariant_basis(Spin(4), n4);
  CHECK(compare_spans(b, b));

  const InvariantBasis b6 = invariant_basis(Spin(6), n4);
  std::string why;
  CHECK(!compare_spans(b, b6, kSpanTol, &why));
  CHECK(why == "spin mismatch");

  InvariantBasis truncated = b;
  truncated.vectors = b.vectors.leftCols(1);
  CHECK(!compare_spans(b, truncated, kSpanTol, &why));
  CHECK(why.find("dimension mismatch") == 0);
}

TEST_CASE("frame covariance: conjugated projector matches the rotated frame") {
  // Building the group with conjugated left factors equals conjugating the
  // projector by the frame rotation's pair action.
  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  const UnitSpinor cs = n4_diagonalizer().unit_spinor();
  for (int two_j : {2, 4, 6}) {
    const Spin j(two_j);
    const Eigen::MatrixXcd p = projector(j, n4);
    const Eigen::MatrixXcd r = pair_action(j, RotationPair(cs, UnitSpinor()));

    Eigen::MatrixXcd rotated_sum =
        Eigen::MatrixXcd::Zero(p.rows(), p.cols());
    for (const DeckElement& el : n4.elements()) {
      const RotationPair conj(cs.adjoint() * el.pair.left() * cs,
                              el.pair.right());
      rotated_sum += pair_action(j, conj);
    }
    rotated_sum /= 24.0;

    CHECK((rotated_sum - r.adjoint() * p * r).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("closed-form functions are invariant at sampled points") {
  const DeckGroup n4 = build_deck_group(ManifoldId::N4);
  const Eigen::Matrix2cd c = n4_diagonalizer().matrix();
  std::mt19937_64 rng(0);
  std::vector<UnitSpinor> points;
  for (int k = 0; k < 25; ++k) points.push_back(UnitSpinor::random(rng));

  for (int two_j : {4, 6}) {
    const Spin j(two_j);
    const InvariantBasis closed = n4_closed_form_basis(j);
    for (int col = 0; col < closed.count(); ++col) {
      const Eigen::VectorXcd coeff = closed.vectors.col(col);
      for (const DeckElement& el : n4.elements()) {
        for (const UnitSpinor& u : points) {
          // f(u) = sum c'_{m1 m2} D_{m1 m2}(c^dag u), sampled before and
          // after the deck transformation of the argument.
          const complexd base =
              evaluate_poly_general(coeff, j, c.adjoint() * u.matrix());
          const complexd moved = evaluate_poly_general(
              coeff, j, c.adjoint() * el.pair.act(u).matrix());
          CHECK(std::abs(base - moved) <
                kBasisTol * std::max(1.0, std::abs(base)));
        }
      }
    }
  }
}

TEST_CASE("mode counts track the volume fraction with quadratic slack") {
  for (ManifoldId m : kAllManifolds) {
    const DeckGroup d = build_deck_group(m);
    double invariant_count = 0.0;
    double total_over_24 = 0.0;
    double previous = 0.0;
    for (int two_j = 0; two_j <= 16; ++two_j) {
      invariant_count += multiplicity(Spin(two_j), d);
      total_over_24 += static_cast<double>((two_j + 1) * (two_j + 1)) / 24.0;
      CHECK(invariant_count >= previous);  // monotone
      const double slack = 0.25 * (two_j + 2) * (two_j + 2);
      CHECK(std::abs(invariant_count - total_over_24) <= slack);
      previous = invariant_count;
    }
  }
}
