#include "octaharm/tables.hpp"

#include <cmath>

namespace octaharm::tables {

namespace {

constexpr double kHalf = 0.5;

UnitSpinor spinor(double ar, double ai, double br, double bi) {
  return UnitSpinor::from_upper_row(complexd(ar, ai), complexd(br, bi));
}

// sqrt(1/2) entries used by the N5 rows.
double rh() { return std::sqrt(0.5); }

const std::array<UnitSpinor, kNamedCount>& named_elements() {
  static const std::array<UnitSpinor, kNamedCount> elems = [] {
    std::array<UnitSpinor, kNamedCount> e{};
    e[kAlpha1] = spinor(kHalf, kHalf, kHalf, kHalf);
    e[kAlpha2] = spinor(kHalf, kHalf, -kHalf, -kHalf);
    e[kAlpha3] = spinor(kHalf, kHalf, -kHalf, kHalf);
    e[kAlpha4] = spinor(kHalf, kHalf, kHalf, -kHalf);
    e[kAlpha1Inv] = spinor(kHalf, -kHalf, -kHalf, -kHalf);
    e[kAlpha2Inv] = spinor(kHalf, -kHalf, kHalf, kHalf);
    e[kAlpha3Inv] = spinor(kHalf, -kHalf, kHalf, -kHalf);
    e[kAlpha4Inv] = spinor(kHalf, -kHalf, -kHalf, kHalf);
    e[kMu] = spinor(0.0, 0.0, 0.0, 1.0);
    e[kNu] = spinor(0.0, 0.0, -1.0, 0.0);
    e[kOmega] = spinor(0.0, -1.0, 0.0, 0.0);
    e[kIdentity] = spinor(1.0, 0.0, 0.0, 0.0);
    return e;
  }();
  return elems;
}

constexpr std::array<const char*, kNamedCount> kLabels{
    "alpha1", "alpha2", "alpha3", "alpha4",
    "alpha1_inv", "alpha2_inv", "alpha3_inv", "alpha4_inv",
    "mu", "nu", "omega", "e"};

// 12x12 product table; entry +/-(k+1) encodes sign * named(k).
// Row and column order matches the named-element index order.
constexpr std::array<std::array<int, 12>, 12> kProducts{{
    // alpha1 row
    {{-5, 4, -11, -10, 12, 9, 6, 3, -7, 2, 8, 1}},
    // alpha2 row
    {{3, -6, 10, -11, -9, 12, 4, 5, 8, -1, 7, 2}},
    // alpha3 row
    {{9, -11, -7, 1, 2, 8, 12, 10, -4, -6, 5, 3}},
    // alpha4 row
    {{-11, -9, 2, -8, 7, 1, -10, 12, 3, 5, 6, 4}},
    // alpha1_inv row
    {{12, 10, 8, 2, -1, 7, -9, 11, 6, -4, -3, 5}},
    // alpha2_inv row
    {{-10, 12, 1, 7, 8, -2, 11, 9, -5, 3, -4, 6}},
    // alpha3_inv row
    {{4, 5, 12, -9, 11, -10, -3, 6, 1, 8, -2, 7}},
    // alpha4_inv row
    {{6, 3, 9, 12, 10, 11, 5, -4, -2, -7, -1, 8}},
    // mu row
    {{-2, 1, -5, 6, 3, -4, 8, -7, -12, -11, 10, 9}},
    // nu row
    {{8, -7, -4, 3, -6, 5, 2, -1, 11, -12, -9, 10}},
    // omega row
    {{7, 8, 6, 5, -4, -3, -1, -2, -10, 9, -12, 11}},
    // e row
    {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
}};

}  // namespace

const UnitSpinor& named_spinor(int idx) { return named_elements().at(idx); }

const char* named_label(int idx) { return kLabels.at(idx); }

UnitSpinor SignedRef::spinor() const {
  const UnitSpinor& base = named_spinor(idx);
  return sign < 0 ? base.negated() : base;
}

SignedRef product_cell(int row, int col) {
  const int coded = kProducts.at(row).at(col);
  return SignedRef{std::abs(coded) - 1, coded > 0 ? 1 : -1};
}

std::array<UnitSpinor, 24> t24_matrices() {
  std::array<UnitSpinor, 24> all{};
  for (int k = 0; k < kNamedCount; ++k) {
    all[2 * k] = named_spinor(k);
    all[2 * k + 1] = named_spinor(k).negated();
  }
  return all;
}

std::array<RotationPair, 24> t24_left_pairs() {
  std::array<RotationPair, 24> pairs{};
  const auto mats = t24_matrices();
  for (int k = 0; k < 24; ++k) pairs[k] = RotationPair(mats[k], UnitSpinor());
  return pairs;
}

std::array<Point4, 24> t24_points() {
  std::array<Point4, 24> pts{};
  const auto mats = t24_matrices();
  for (int k = 0; k < 24; ++k) pts[k] = spinor_to_point(mats[k]);
  return pts;
}

std::array<RotationPair, 4> expected_generators(ManifoldId m) {
  const auto& named = named_elements();
  switch (m) {
    case ManifoldId::N4:
      return {RotationPair(named[kAlpha2].negated(), named[kMu]),
              RotationPair(named[kAlpha2Inv].negated(), named[kIdentity].negated()),
              RotationPair(named[kAlpha2], named[kNu]),
              RotationPair(named[kAlpha2Inv], named[kOmega])};
    case ManifoldId::N5: {
      const double s = rh();
      const UnitSpinor l45 = spinor(0.0, -s, -s, 0.0);      // sqrt(1/2) [[-i,-1],[1,i]]
      const UnitSpinor l78 = spinor(0.0, 0.0, s, -s);       // [[0, th_bar], [-th, 0]]
      const UnitSpinor ra = spinor(s, 0.0, -s, 0.0);        // sqrt(1/2) [[1,-1],[1,1]]
      const UnitSpinor rb = spinor(s, 0.0, s, 0.0);         // sqrt(1/2) [[1,1],[-1,1]]
      return {RotationPair(l45, rb.negated()),
              RotationPair(named[kAlpha2], named[kNu]),
              RotationPair(l78, rb),
              RotationPair(named[kAlpha2], named[kIdentity])};
    }
    case ManifoldId::N6:
      return {RotationPair(named[kAlpha1], named[kIdentity]),
              RotationPair(named[kAlpha2Inv], named[kIdentity]),
              RotationPair(named[kAlpha4Inv], named[kIdentity]),
              RotationPair(named[kAlpha3], named[kIdentity])};
  }
  throw DomainError("unknown manifold");
}

std::array<UnitSpinor, 3> n4_left_cycle() {
  return {named_spinor(kIdentity), named_spinor(kAlpha2).negated(),
          named_spinor(kAlpha2Inv).negated()};
}

std::array<UnitSpinor, 8> n4_right_quaternions() {
  std::array<UnitSpinor, 8> q{};
  const std::array<int, 4> base{kIdentity, kMu, kNu, kOmega};
  for (int k = 0; k < 4; ++k) {
    q[2 * k] = named_spinor(base[k]);
    q[2 * k + 1] = named_spinor(base[k]).negated();
  }
  return q;
}

std::array<RotationPair, 24> n4_element_pairs() {
  std::array<RotationPair, 24> pairs{};
  const auto lefts = n4_left_cycle();
  const auto rights = n4_right_quaternions();
  int n = 0;
  for (const auto& l : lefts)
    for (const auto& r : rights) pairs[n++] = RotationPair(l, r);
  return pairs;
}

std::array<N5Row, 12> n5_rows() {
  const auto& named = named_elements();
  const double s = rh();
  const UnitSpinor l45 = spinor(0.0, -s, -s, 0.0);
  const UnitSpinor l78 = spinor(0.0, 0.0, s, -s);
  const UnitSpinor l10 = spinor(0.0, -s, 0.0, -s);  // -sqrt(1/2) [[i,i],[i,-i]]
  const UnitSpinor l12 = spinor(0.0, s, 0.0, s);    //  sqrt(1/2) [[i,i],[i,-i]]
  const UnitSpinor ra = spinor(s, 0.0, -s, 0.0);
  const UnitSpinor rb = spinor(s, 0.0, s, 0.0);

  return {{
      {named[kAlpha2Inv], named[kNu].negated(), {kAlpha1, 1}},
      {named[kAlpha2Inv], named[kIdentity], {kAlpha2, 1}},
      {named[kAlpha2], named[kNu], {kAlpha3, 1}},
      {l45, ra, {kAlpha4, 1}},
      {l45, rb.negated(), {kAlpha1Inv, 1}},
      {named[kAlpha2], named[kIdentity], {kAlpha2Inv, 1}},
      {l78, ra.negated(), {kAlpha3Inv, 1}},
      {l78, rb, {kAlpha4Inv, 1}},
      {named[kIdentity], named[kIdentity], {kIdentity, 1}},
      {l10, rb, {kMu, 1}},
      {named[kIdentity], named[kNu], {kNu, 1}},
      {l12, ra, {kOmega, 1}},
  }};
}

std::array<RotationPair, 24> n5_element_pairs() {
  std::array<RotationPair, 24> pairs{};
  const auto rows = n5_rows();
  for (int r = 0; r < 12; ++r) {
    pairs[2 * r] = RotationPair(rows[r].left, rows[r].right_plus);
    pairs[2 * r + 1] = RotationPair(rows[r].left, rows[r].right_plus.negated());
  }
  return pairs;
}

Eigen::Matrix2cd frame_rotation_matrix() {
  const double r3 = std::sqrt(3.0);
  const double dm = std::sqrt(3.0 - r3);
  const double dp = std::sqrt(3.0 + r3);
  const complexd one_minus_i(1.0, -1.0);
  Eigen::Matrix2cd c;
  c(0, 0) = one_minus_i * (-1.0 + r3) / (2.0 * dm);
  c(0, 1) = -one_minus_i * (1.0 + r3) / (2.0 * dp);
  c(1, 0) = complexd(1.0 / dm, 0.0);
  c(1, 1) = complexd(1.0 / dp, 0.0);
  return c;
}

}  // namespace octaharm::tables
