#pragma once

#include <array>

#include <Eigen/Core>

#include "octaharm/algebra.hpp"
#include "octaharm/deck.hpp"

// Stored reference constants: the 24-element binary tetrahedral matrix set
// (table 6.2), its 12x12 product table (table 6.3), the generator tables of
// the three deck groups (tables 4.1, 5.1, 6.1), the N4 subgroup data
// (table 4.2), the N5 element list (table 5.2), and the frame-rotation
// matrix diagonalizing the N4 left generator.
namespace octaharm::tables {

// Named elements, index order: alpha1..alpha4, alpha1_inv..alpha4_inv,
// mu, nu, omega, e.
inline constexpr int kNamedCount = 12;
inline constexpr int kAlpha1 = 0, kAlpha2 = 1, kAlpha3 = 2, kAlpha4 = 3;
inline constexpr int kAlpha1Inv = 4, kAlpha2Inv = 5, kAlpha3Inv = 6, kAlpha4Inv = 7;
inline constexpr int kMu = 8, kNu = 9, kOmega = 10, kIdentity = 11;

const UnitSpinor& named_spinor(int idx);
const char* named_label(int idx);

struct SignedRef {
  int idx;
  int sign;  // +1 or -1
  UnitSpinor spinor() const;
};

/// Product table cell: named(row) * named(col) as a signed named element.
SignedRef product_cell(int row, int col);

/// All 24 matrices (the 12 named elements and their negatives).
std::array<UnitSpinor, 24> t24_matrices();

/// The same 24 matrices as sign classes (w, e); for N6 this is the full
/// stored deck group.
std::array<RotationPair, 24> t24_left_pairs();

/// The 24 tile-center points (images of the t24 matrices on S^3).
std::array<Point4, 24> t24_points();

/// Expected generator pairs per manifold (tables 4.1 / 5.1 / 6.1).
std::array<RotationPair, 4> expected_generators(ManifoldId m);

/// N4 subgroup constituents (table 4.2): the left 3-cycle and the right
/// quaternion factors.
std::array<UnitSpinor, 3> n4_left_cycle();
std::array<UnitSpinor, 8> n4_right_quaternions();
std::array<RotationPair, 24> n4_element_pairs();

/// N5 element list (table 5.2): 12 rows, each standing for the +/- pair of
/// elements (w_l, +/- w_r) with centers +/- center.
struct N5Row {
  UnitSpinor left;
  UnitSpinor right_plus;
  SignedRef center_plus;
};
std::array<N5Row, 12> n5_rows();
std::array<RotationPair, 24> n5_element_pairs();

/// Frame rotation c with c^dag (-alpha2) c = diag(exp(2pi i/3), exp(-2pi i/3)).
Eigen::Matrix2cd frame_rotation_matrix();

}  // namespace octaharm::tables
