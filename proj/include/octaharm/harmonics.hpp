#pragma once

#include <Eigen/Core>

#include "octaharm/algebra.hpp"
#include "octaharm/deck.hpp"

namespace octaharm {

/// Double precision holds the 1e-10 representation contracts comfortably up
/// to this spin; the constructor refuses anything larger.
inline constexpr int kMaxTwoJ = 32;

/// Spin stored as 2j to keep half-integers exact.
struct Spin {
  int two_j;

  explicit Spin(int two_j_);
  double j() const { return 0.5 * two_j; }
  int dim() const { return two_j + 1; }
  bool is_integer() const { return two_j % 2 == 0; }
};

/// Representation matrix D^j(u), (2j+1) x (2j+1), row/column indices m', m
/// descending from j to -j. D^0 = [1]; D^{1/2}(u) = u; entries homogeneous
/// of degree 2j in the entries of u; unitary and multiplicative.
Eigen::MatrixXcd wigner_d(Spin j, const UnitSpinor& u);

/// The same polynomial construction on an arbitrary 2x2 matrix; still
/// multiplicative. Used for frames that are unitary but not special.
Eigen::MatrixXcd wigner_d_general(Spin j, const Eigen::Matrix2cd& m);

/// chi^j(w) = sum_{m=-j..j} lambda^{2m} over the eigenvalues of w;
/// real-valued and equal to the trace of wigner_d(j, w).
double su2_character(Spin j, const UnitSpinor& w);

/// Matrix of T_g on coefficient vectors c_{m1,m2} (row-major), size
/// (2j+1)^2: c'_{n1,n2} = sum_{m1,m2} D^j_{m1,n1}(w_l^-1) D^j_{n2,m2}(w_r)
/// c_{m1,m2}. Independent of the sign representative at every spin.
Eigen::MatrixXcd pair_action(Spin j, const RotationPair& g);

/// Invariant multiplicity m(j) = round((1/24) sum_g chi^j(w_l) chi^j(w_r)).
/// Throws NumericsError when the pre-rounding value sits farther than
/// kBasisTol from an integer.
int multiplicity(Spin j, const DeckGroup& d);

/// Pre-rounding character average (diagnostic and oracle use).
double multiplicity_raw(Spin j, const DeckGroup& d);

}  // namespace octaharm
