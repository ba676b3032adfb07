#include "octaharm/harmonics.hpp"

#include <algorithm>
#include <cmath>

namespace octaharm {

namespace {

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 2 * kMaxTwoJ + 2> t{};
    t[0] = 1.0;
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * static_cast<double>(k);
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

complexd ipow(complexd z, int n) {
  complexd r(1.0, 0.0);
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

Eigen::MatrixXcd wigner_core(int two_j, complexd a, complexd b, complexd c,
                             complexd d) {
  const int dim = two_j + 1;
  Eigen::MatrixXcd m(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int p_mp = two_j - row;  // j + m'
    const int q_mp = row;          // j - m'
    for (int col = 0; col < dim; ++col) {
      const int p_m = two_j - col;  // j + m
      const int q_m = col;          // j - m
      const double root = std::sqrt(factorial(p_mp) * factorial(q_mp) *
                                    factorial(p_m) * factorial(q_m));
      const int k_min = std::max(0, p_m + p_mp - two_j);
      const int k_max = std::min(p_m, p_mp);
      complexd sum(0.0, 0.0);
      for (int k = k_min; k <= k_max; ++k) {
        const double denom = factorial(k) * factorial(p_m - k) *
                             factorial(p_mp - k) *
                             factorial(k + two_j - p_m - p_mp);
        sum += (root / denom) * ipow(a, k) * ipow(b, p_mp - k) *
               ipow(c, p_m - k) * ipow(d, k + two_j - p_m - p_mp);
      }
      m(row, col) = sum;
    }
  }
  return m;
}

}  // namespace

Spin::Spin(int two_j_) : two_j(two_j_) {
  if (two_j < 0) throw DomainError("spin must be non-negative");
  if (two_j > kMaxTwoJ) {
    throw DomainError("spin exceeds the supported maximum (2j > 32)");
  }
}

Eigen::MatrixXcd wigner_d(Spin j, const UnitSpinor& u) {
  return wigner_core(j.two_j, u.a(), u.b(), u.c(), u.d());
}

Eigen::MatrixXcd wigner_d_general(Spin j, const Eigen::Matrix2cd& m) {
  return wigner_core(j.two_j, m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

double su2_character(Spin j, const UnitSpinor& w) {
  const double cos_phi = std::clamp(w.half_trace(), -1.0, 1.0);
  const double phi = std::acos(cos_phi);
  double chi = 0.0;
  for (int r = 0; r <= j.two_j; ++r) {
    chi += std::cos(static_cast<double>(j.two_j - 2 * r) * phi);
  }
  return chi;
}

Eigen::MatrixXcd pair_action(Spin j, const RotationPair& g) {
  const int dim = j.dim();
  const Eigen::MatrixXcd left = wigner_d(j, g.left().adjoint());
  const Eigen::MatrixXcd right = wigner_d(j, g.right());
  Eigen::MatrixXcd m(dim * dim, dim * dim);
  for (int n1 = 0; n1 < dim; ++n1)
    for (int n2 = 0; n2 < dim; ++n2)
      for (int m1 = 0; m1 < dim; ++m1)
        for (int m2 = 0; m2 < dim; ++m2)
          m(n1 * dim + n2, m1 * dim + m2) = left(m1, n1) * right(n2, m2);
  return m;
}

double multiplicity_raw(Spin j, const DeckGroup& d) {
  double sum = 0.0;
  for (const DeckElement& el : d.elements()) {
    sum += su2_character(j, el.pair.left()) * su2_character(j, el.pair.right());
  }
  return sum / static_cast<double>(DeckGroup::kOrder);
}

int multiplicity(Spin j, const DeckGroup& d) {
  const double raw = multiplicity_raw(j, d);
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) > kBasisTol) {
    throw NumericsError("character sum is not an integer multiplicity");
  }
  return static_cast<int>(rounded);
}

}  // namespace octaharm
