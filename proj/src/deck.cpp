#include "octaharm/deck.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

#include "octaharm/coxeter.hpp"
#include "octaharm/tables.hpp"

namespace octaharm {

namespace {

GeneratorWord word(std::initializer_list<WordToken> tokens) {
  GeneratorWord w;
  w.rotations.assign(tokens);
  w.ends_with_inversion = true;
  return w;
}

void append_check(CheckReport& report, std::string name, double residual,
                  double tol, std::string detail = {}) {
  report.items.push_back(
      {std::move(name), residual <= tol, residual, std::move(detail)});
}

// --- exact integer group models used as identification templates ------------

// Quaternions with doubled integer coordinates (units carry |q| = 2), so the
// 24 Hurwitz units and the 8 Lipschitz units multiply exactly in int space.
struct Quat {
  int w, x, y, z;
  bool operator==(const Quat&) const = default;
};

Quat qmul(const Quat& a, const Quat& b) {
  // Each factor is doubled, so halve the product to stay in the convention.
  return {(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z) / 2,
          (a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y) / 2,
          (a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x) / 2,
          (a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w) / 2};
}

using MultTable = std::vector<std::vector<int>>;

// Multiplication table of C_{n_cyclic} x <els>; n_cyclic = 1 gives the
// quaternion model alone.
MultTable table_from_elements(const std::vector<Quat>& els, int n_cyclic = 1) {
  const int n = static_cast<int>(els.size()) * n_cyclic;
  MultTable t(n, std::vector<int>(n, -1));
  auto find_quat = [&](const Quat& q) {
    for (std::size_t k = 0; k < els.size(); ++k)
      if (els[k] == q) return static_cast<int>(k);
    throw StructureError("template model is not closed");
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ri = i / static_cast<int>(els.size());
      const int rj = j / static_cast<int>(els.size());
      const int qi = i % static_cast<int>(els.size());
      const int qj = j % static_cast<int>(els.size());
      const int rk = n_cyclic == 1 ? 0 : (ri + rj) % n_cyclic;
      t[i][j] = rk * static_cast<int>(els.size()) +
                find_quat(qmul(els[qi], els[qj]));
    }
  }
  return t;
}

MultTable binary_tetrahedral_table() {
  std::vector<Quat> units;
  for (int s = -2; s <= 2; s += 4)
    for (int axis = 0; axis < 4; ++axis) {
      Quat q{0, 0, 0, 0};
      (axis == 0 ? q.w : axis == 1 ? q.x : axis == 2 ? q.y : q.z) = s;
      units.push_back(q);
    }
  for (int sw = -1; sw <= 1; sw += 2)
    for (int sx = -1; sx <= 1; sx += 2)
      for (int sy = -1; sy <= 1; sy += 2)
        for (int sz = -1; sz <= 1; sz += 2) units.push_back({sw, sx, sy, sz});
  return table_from_elements(units);
}

MultTable c3_x_q8_table() {
  std::vector<Quat> units;
  for (int s = -2; s <= 2; s += 4)
    for (int axis = 0; axis < 4; ++axis) {
      Quat q{0, 0, 0, 0};
      (axis == 0 ? q.w : axis == 1 ? q.x : axis == 2 ? q.y : q.z) = s;
      units.push_back(q);
    }
  return table_from_elements(units, 3);
}

int table_identity(const MultTable& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = t[e][i] == i && t[i][e] == i;
    if (ok) return e;
  }
  throw StructureError("multiplication table has no identity");
}

int table_order(const MultTable& t, int identity, int g) {
  int cur = g, n = 1;
  while (cur != identity) {
    cur = t[cur][g];
    ++n;
    if (n > static_cast<int>(t.size()))
      throw StructureError("element order exceeds group order");
  }
  return n;
}

std::vector<int> generating_set(const MultTable& t, int identity) {
  const int n = static_cast<int>(t.size());
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  reached[identity] = 1;
  int count = 1;
  auto grow = [&]() {
    std::deque<int> work;
    for (int i = 0; i < n; ++i)
      if (reached[i]) work.push_back(i);
    while (!work.empty()) {
      const int a = work.front();
      work.pop_front();
      for (int g : gens) {
        const int b = t[a][g];
        if (!reached[b]) {
          reached[b] = 1;
          ++count;
          work.push_back(b);
        }
      }
    }
  };
  for (int cand = 0; cand < n && count < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    grow();
  }
  return gens;
}

// Backtracking isomorphism search on multiplication tables: map a generating
// set of A to order-matched elements of B and extend by products.
bool extend_isomorphism(const MultTable& a, const MultTable& b, int id_a,
                        int id_b, const std::vector<int>& gens,
                        const std::vector<int>& images) {
  const int n = static_cast<int>(a.size());
  std::vector<int> map(n, -1);
  std::vector<char> hit(n, 0);
  map[id_a] = id_b;
  hit[id_b] = 1;
  std::deque<int> work{id_a};
  std::vector<int> known{id_a};
  while (!work.empty()) {
    const int x = work.front();
    work.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int xa = a[x][gens[k]];
      const int xb = b[map[x]][images[k]];
      if (map[xa] == -1) {
        if (hit[xb]) return false;
        map[xa] = xb;
        hit[xb] = 1;
        work.push_back(xa);
        known.push_back(xa);
      } else if (map[xa] != xb) {
        return false;
      }
    }
  }
  if (static_cast<int>(known.size()) != n) return false;
  // Homomorphism check over all pairs; cheap at n = 24.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (map[a[i][j]] != b[map[i]][map[j]]) return false;
  return true;
}

bool tables_isomorphic(const MultTable& a, const MultTable& b) {
  if (a.size() != b.size()) return false;
  const int id_a = table_identity(a);
  const int id_b = table_identity(b);
  const int n = static_cast<int>(a.size());

  std::vector<int> orders_a(n), orders_b(n);
  for (int i = 0; i < n; ++i) {
    orders_a[i] = table_order(a, id_a, i);
    orders_b[i] = table_order(b, id_b, i);
  }
  {
    auto sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  const std::vector<int> gens = generating_set(a, id_a);
  std::vector<int> images(gens.size(), -1);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int cand = 0; cand < n; ++cand)
      if (orders_b[cand] == orders_a[gens[k]]) candidates[k].push_back(cand);

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return extend_isomorphism(a, b, id_a, id_b, gens, images);
    for (int cand : candidates[k]) {
      images[k] = cand;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

const char* to_string(ManifoldId m) {
  switch (m) {
    case ManifoldId::N4: return "N4";
    case ManifoldId::N5: return "N5";
    case ManifoldId::N6: return "N6";
  }
  return "?";
}

std::optional<ManifoldId> manifold_from_string(std::string_view name) {
  if (name == "N4" || name == "n4") return ManifoldId::N4;
  if (name == "N5" || name == "n5") return ManifoldId::N5;
  if (name == "N6" || name == "n6") return ManifoldId::N6;
  return std::nullopt;
}

std::string GeneratorWord::text() const {
  std::ostringstream out;
  // Compress immediate repetitions into powers, the way the words are printed.
  for (std::size_t k = 0; k < rotations.size();) {
    std::size_t run = 1;
    while (k + run < rotations.size() && rotations[k + run].i == rotations[k].i &&
           rotations[k + run].j == rotations[k].j)
      ++run;
    out << "(W" << rotations[k].i << "W" << rotations[k].j << ")";
    if (run > 1) out << "^" << run;
    k += run;
  }
  if (ends_with_inversion) out << "J4";
  return out.str();
}

std::array<GeneratorWord, 4> generator_words(ManifoldId m) {
  switch (m) {
    case ManifoldId::N4:
      return {word({{2, 3}, {2, 3}, {1, 2}, {4, 0}}),
              word({{3, 2}, {1, 2}, {4, 0}, {2, 3}}),
              word({{2, 1}, {4, 0}, {2, 3}, {2, 3}, {2, 1}}),
              word({{1, 2}, {3, 2}, {2, 1}, {4, 0}, {3, 2}})};
    case ManifoldId::N5:
      return {word({{1, 2}, {3, 2}, {4, 0}}),
              word({{2, 1}, {4, 0}, {2, 3}, {2, 3}, {2, 1}}),
              word({{1, 2}, {2, 3}, {2, 3}, {1, 2}, {4, 0}, {2, 3}, {2, 1}}),
              word({{2, 1}, {2, 3}, {2, 3}, {1, 2}, {4, 0}, {2, 3}, {2, 3}, {1, 2}})};
    case ManifoldId::N6:
      return {word({{1, 2}, {4, 0}}),
              word({{3, 2}, {1, 2}, {4, 0}, {2, 3}}),
              word({{2, 3}, {2, 3}, {1, 2}, {4, 0}, {2, 3}, {2, 3}}),
              word({{2, 3}, {1, 2}, {4, 0}, {3, 2}})};
  }
  throw DomainError("unknown manifold");
}

RotationPair evaluate_word(const GeneratorWord& w) {
  RotationPair g;
  for (const WordToken& t : w.rotations) g = g * rotation_pair(t.i, t.j);
  if (w.ends_with_inversion) g = g * RotationPair::inversion();
  return g;
}

DeckGroup::DeckGroup(ManifoldId m, std::vector<DeckElement> elements,
                     std::array<RotationPair, 4> generators)
    : manifold_(m), elements_(std::move(elements)), generators_(generators) {
  if (elements_.size() != kOrder) {
    throw ClosureOrderError("deck group must contain exactly 24 elements");
  }
  bool have_identity = false;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i].pair.key(), i).second) {
      throw ClosureOrderError("deck group contains duplicate elements");
    }
    if (elements_[i].pair.is_identity()) {
      identity_ = i;
      have_identity = true;
    }
  }
  if (!have_identity) throw ClosureOrderError("deck group lacks the identity");

  mult_.resize(kOrder);
  for (std::size_t i = 0; i < kOrder; ++i) {
    for (std::size_t j = 0; j < kOrder; ++j) {
      const auto idx = index_of(elements_[i].pair * elements_[j].pair);
      if (!idx) throw ClosureOrderError("deck group is not closed under products");
      mult_[i][j] = static_cast<std::uint8_t>(*idx);
    }
  }
}

std::optional<std::size_t> DeckGroup::index_of(const RotationPair& g) const {
  const auto it = index_.find(g.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int DeckGroup::element_order(std::size_t i) const {
  std::size_t cur = i;
  int n = 1;
  while (cur != identity_) {
    cur = mult_[cur][i];
    ++n;
    if (n > static_cast<int>(kOrder))
      throw StructureError("element order exceeds group order");
  }
  return n;
}

DeckGroup build_deck_group(ManifoldId m) {
  const auto words = generator_words(m);
  std::array<RotationPair, 4> gens{};
  for (int k = 0; k < 4; ++k) gens[k] = evaluate_word(words[k]);

  std::vector<DeckElement> elements;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen;
  elements.push_back({RotationPair(), "e"});
  seen.emplace(elements.front().pair.key(), 0);
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    const std::size_t cur = work.front();
    work.pop_front();
    for (int k = 0; k < 4; ++k) {
      const RotationPair next = elements[cur].pair * gens[k];
      if (seen.count(next.key())) continue;
      if (elements.size() >= 2 * DeckGroup::kOrder) {
        throw ClosureOrderError("deck closure exceeded 24 elements");
      }
      std::string w = elements[cur].word == "e"
                          ? std::string("g") + std::to_string(k + 1)
                          : elements[cur].word + " g" + std::to_string(k + 1);
      seen.emplace(next.key(), elements.size());
      elements.push_back({next, std::move(w)});
      work.push_back(elements.size() - 1);
    }
  }
  return DeckGroup(m, std::move(elements), gens);
}

std::vector<Point4> center_positions(const DeckGroup& d) {
  std::vector<Point4> centers;
  centers.reserve(DeckGroup::kOrder);
  for (const DeckElement& el : d.elements()) {
    centers.push_back(spinor_to_point(el.pair.left().adjoint() * el.pair.right()));
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      if (centers[i].distance(centers[j]) < 1e-6) {
        throw DegeneracyError("two deck elements map the prototile center to the same point");
      }
    }
  }
  return centers;
}

bool compare_center_sets(const DeckGroup& a, const DeckGroup& b, double tol) {
  const auto ca = center_positions(a);
  const auto cb = center_positions(b);
  std::vector<char> used(cb.size(), 0);
  for (const Point4& p : ca) {
    bool found = false;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (!used[j] && p.distance(cb[j]) < tol) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

GroupDescriptor identify_group(const DeckGroup& d) {
  GroupDescriptor desc;
  const std::size_t n = DeckGroup::kOrder;
  for (std::size_t i = 0; i < n; ++i) desc.order_histogram[d.element_order(i)]++;

  int center = 0;
  bool abelian = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool commutes_with_all = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (d.product_index(i, j) != d.product_index(j, i)) {
        commutes_with_all = false;
        abelian = false;
      }
    }
    if (commutes_with_all) ++center;
  }
  desc.center_size = center;
  desc.abelian = abelian;

  MultTable own(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      own[i][j] = static_cast<int>(d.product_index(i, j));

  if (tables_isomorphic(own, binary_tetrahedral_table())) {
    desc.matched_template = "binary_tetrahedral_2_3_3";
  } else if (tables_isomorphic(own, c3_x_q8_table())) {
    desc.matched_template = "c3_x_q8";
  }
  return desc;
}

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Item& it) { return it.pass; });
}

double CheckReport::max_residual() const {
  double r = 0.0;
  for (const Item& it : items) r = std::max(r, it.residual);
  return r;
}

std::string CheckReport::first_failure() const {
  for (const Item& it : items)
    if (!it.pass) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
  return {};
}

CheckReport verify_n4_structure(const DeckGroup& d, bool throw_on_failure) {
  CheckReport report;

  // Cubes act from the right: left factor of g^3 is +/- e.
  std::vector<RotationPair> cubes;
  double cube_residual = 0.0;
  for (const RotationPair& g : d.generators()) {
    const RotationPair c = g * g * g;
    const double res = std::min(c.left().distance(UnitSpinor()),
                                c.left().distance(UnitSpinor().negated()));
    cube_residual = std::max(cube_residual, res);
    cubes.push_back(c);
  }
  append_check(report, "generator cubes have +/-e left factor", cube_residual,
               kTableTol);

  // Closure of the cubes: the right-acting quaternion subgroup.
  auto insert_unique = [](std::vector<RotationPair>& set, const RotationPair& p) {
    for (const RotationPair& q : set)
      if (q.distance(p) < kTableTol) return false;
    set.push_back(p);
    return true;
  };
  auto absorb = [&insert_unique](std::vector<RotationPair>& set, std::size_t cap) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (set.size() >= cap) throw StructureError("subgroup closure diverged");
          grew = insert_unique(set, set[i] * set[j]) || grew;
        }
      }
    }
  };
  std::vector<RotationPair> q8{RotationPair()};
  for (const RotationPair& c : cubes) insert_unique(q8, c);
  absorb(q8, 32);
  append_check(report, "cube subgroup order 8",
               std::abs(static_cast<double>(q8.size()) - 8.0), 0.0);

  std::map<int, int> q8_orders;
  for (const RotationPair& g : q8) {
    RotationPair cur = g;
    int n = 1;
    while (!cur.is_identity() && n <= 8) { cur = cur * g; ++n; }
    q8_orders[n]++;
  }
  const bool q8_shape = q8_orders[1] == 1 && q8_orders[2] == 1 && q8_orders[4] == 6;
  append_check(report, "cube subgroup is the quaternion group",
               q8_shape ? 0.0 : 1.0, 0.5);

  // Fourth powers act from the left and are powers of (-alpha2, e).
  const RotationPair c3_gen(tables::named_spinor(tables::kAlpha2).negated(),
                            UnitSpinor());
  const std::array<RotationPair, 3> c3{RotationPair(), c3_gen, c3_gen * c3_gen};
  double fourth_residual = 0.0;
  std::vector<RotationPair> c3_set{RotationPair()};
  for (const RotationPair& g : d.generators()) {
    const RotationPair p = g * g * g * g;
    double best = 1e9;
    for (const RotationPair& c : c3) best = std::min(best, p.distance(c));
    fourth_residual = std::max(fourth_residual, best);
    insert_unique(c3_set, p);
  }
  absorb(c3_set, 12);
  append_check(report, "generator fourth powers are powers of (-alpha2, e)",
               fourth_residual, kTableTol);
  append_check(report, "fourth-power subgroup order 3",
               std::abs(static_cast<double>(c3_set.size()) - 3.0), 0.0);

  // The two subgroups commute elementwise and intersect trivially.
  double commute_residual = 0.0;
  for (const RotationPair& c : c3_set)
    for (const RotationPair& q : q8)
      commute_residual = std::max(commute_residual, (c * q).distance(q * c));
  append_check(report, "left and right subgroups commute", commute_residual,
               kTableTol);

  int intersection = 0;
  for (const RotationPair& c : c3_set)
    for (const RotationPair& q : q8)
      if (c.distance(q) < kTableTol) ++intersection;
  append_check(report, "subgroups intersect only in the identity",
               std::abs(static_cast<double>(intersection) - 1.0), 0.0);

  // Products of the two subgroups exhaust the 24-element group.
  std::size_t matched = 0;
  for (const RotationPair& c : c3_set)
    for (const RotationPair& q : q8)
      if (d.index_of(c * q)) ++matched;
  const bool product_covers = matched == c3_set.size() * q8.size() &&
                              c3_set.size() * q8.size() == DeckGroup::kOrder;
  append_check(report, "subgroup products cover the group",
               product_covers ? 0.0 : 1.0, 0.5);

  if (throw_on_failure && !report.all_pass()) {
    throw StructureError("N4 structure check failed: " + report.first_failure());
  }
  return report;
}

CheckReport verify_t24_tables(const DeckGroup& d, bool throw_on_failure) {
  CheckReport report;

  // Element set: closure == stored 24 matrices paired with e, mod sign.
  const auto stored = tables::t24_left_pairs();
  double set_residual = 0.0;
  bool set_ok = true;
  for (const RotationPair& p : stored) {
    const auto idx = d.index_of(p);
    if (!idx) { set_ok = false; continue; }
    set_residual = std::max(set_residual, d.element(*idx).distance(p));
  }
  report.items.push_back({"table 6.2 element set", set_ok && set_residual < kTableTol,
                          set_residual, set_ok ? "" : "stored element missing from closure"});

  // All 144 products of the stored table.
  double prod_residual = 0.0;
  std::string bad_cell;
  for (int r = 0; r < tables::kNamedCount; ++r) {
    for (int c = 0; c < tables::kNamedCount; ++c) {
      const UnitSpinor lhs = tables::named_spinor(r) * tables::named_spinor(c);
      const UnitSpinor rhs = tables::product_cell(r, c).spinor();
      const double res = lhs.distance(rhs);
      if (res > prod_residual) {
        prod_residual = res;
        if (res > kTableTol) {
          bad_cell = std::string("row ") + tables::named_label(r) + ", column " +
                     tables::named_label(c);
        }
      }
    }
  }
  report.items.push_back({"table 6.3 products (144 cells)",
                          prod_residual < kTableTol, prod_residual, bad_cell});

  // Unit relations: alpha^3 = alpha^-3 = -e, half-traces 1/2, mu^2 = nu^2 =
  // omega^2 = -e.
  double rel_residual = 0.0;
  const UnitSpinor minus_e = UnitSpinor().negated();
  for (int k = tables::kAlpha1; k <= tables::kAlpha4Inv; ++k) {
    const UnitSpinor& a = tables::named_spinor(k);
    rel_residual = std::max(rel_residual, (a * a * a).distance(minus_e));
    rel_residual = std::max(rel_residual, std::abs(a.half_trace() - 0.5));
  }
  for (int k : {tables::kMu, tables::kNu, tables::kOmega}) {
    const UnitSpinor& a = tables::named_spinor(k);
    rel_residual = std::max(rel_residual, (a * a).distance(minus_e));
  }
  append_check(report, "unit relations", rel_residual, kTableTol);

  if (throw_on_failure && !report.all_pass()) {
    throw TableError("stored table check failed: " + report.first_failure());
  }
  return report;
}

GluingScheme gluing_data(ManifoldId m) {
  switch (m) {
    case ManifoldId::N4:
      return {{{{{6, 2}}, {{5, 3}}, {{1, 4}}, {{7, 8}}}},
              {{{{1, 4, 9}}, {{2, 7, -12}}, {{3, 6, -10}}, {{5, 8, 11}}}}};
    case ManifoldId::N5:
      return {{{{{6, 8}}, {{1, 4}}, {{2, 7}}, {{3, 5}}}},
              {{{{1, 4, 9}}, {{2, -7, -12}}, {{3, 6, 8}}, {{5, -10, 11}}}}};
    case ManifoldId::N6:
      return {{{{{6, 4}}, {{5, 3}}, {{8, 2}}, {{7, 1}}}},
              {{{{1, 8, 10}}, {{2, 5, 11}}, {{3, 6, 12}}, {{4, 7, 9}}}}};
  }
  throw DomainError("unknown manifold");
}

}  // namespace octaharm
