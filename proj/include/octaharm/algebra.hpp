#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "octaharm/errors.hpp"

namespace octaharm {

using complexd = std::complex<double>;

// Tolerance ladder. Three decades separate rounding noise from every
// decision threshold.
inline constexpr double kNormTol = 1e-10;    // type invariants (unit norm, unitarity)
inline constexpr double kKeyTol = 1e-6;      // closure hashing grid
inline constexpr double kTableTol = 1e-12;   // reference table reproduction
inline constexpr double kBasisTol = 1e-9;    // basis invariance at sampled points
inline constexpr double kSpanTol = 1e-6;     // principal-angle agreement of spans
inline constexpr double kRankCutoff = 1e-6;  // singular-value cutoff for numerical rank

/// Point in E^4. Unit norm is required only where an operation says so;
/// unconstrained points are legal (e.g. intermediate arithmetic).
struct Point4 {
  double x0 = 1.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  double dot(const Point4& o) const {
    return x0 * o.x0 + x1 * o.x1 + x2 * o.x2 + x3 * o.x3;
  }
  double norm() const;
  double distance(const Point4& o) const;
  Point4 normalized() const;

  Eigen::Vector4d vector() const { return {x0, x1, x2, x3}; }
  static Point4 from_vector(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }

  /// Uniform point on S^3 (normalized Gaussian 4-vector).
  static Point4 random_unit(std::mt19937_64& rng);
};

/// 2x2 special-unitary matrix [[a, b], [-conj(b), conj(a)]]. The lower row
/// is derived from the upper, so unit determinant holds by construction and
/// only |a|^2 + |b|^2 = 1 needs checking.
class UnitSpinor {
 public:
  UnitSpinor() : a_(1.0, 0.0), b_(0.0, 0.0) {}

  /// Full-matrix constructor; rejects input that is not special-unitary
  /// within kNormTol.
  UnitSpinor(complexd a, complexd b, complexd c, complexd d);

  /// Builds from the upper row alone; rejects non-unit rows.
  static UnitSpinor from_upper_row(complexd a, complexd b);

  complexd a() const { return a_; }
  complexd b() const { return b_; }
  complexd c() const { return -std::conj(b_); }
  complexd d() const { return std::conj(a_); }

  UnitSpinor operator*(const UnitSpinor& o) const {
    return from_upper_row(a_ * o.a_ - b_ * std::conj(o.b_),
                          a_ * o.b_ + b_ * std::conj(o.a_));
  }
  UnitSpinor adjoint() const { return from_upper_row(std::conj(a_), -b_); }
  UnitSpinor negated() const { return from_upper_row(-a_, -b_); }

  /// Tr/2; real for special-unitary matrices.
  double half_trace() const { return a_.real(); }

  Eigen::Matrix2cd matrix() const;

  /// Max entrywise modulus of the difference.
  double distance(const UnitSpinor& o) const;

  static UnitSpinor random(std::mt19937_64& rng);

 private:
  complexd a_, b_;
};

/// u = [[z1, z2], [-conj(z2), conj(z1)]] with z1 = x0 - i x3, z2 = -x2 - i x1.
/// Throws NormError unless |x| = 1 within kNormTol.
UnitSpinor point_to_spinor(const Point4& x);

/// Inverse of point_to_spinor; total on UnitSpinor by construction.
Point4 spinor_to_point(const UnitSpinor& u);

/// Quantized key over 16 reals on the kKeyTol grid. Equal keys imply
/// max-norm distance < kKeyTol; distances > 10 kKeyTol never collide.
struct CanonicalKey {
  std::array<std::int64_t, 16> q{};
  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

CanonicalKey quantize16(const std::array<double, 16>& values);

/// Element of SO(4) represented as a pair (w_l, w_r) acting on S^3 by
/// u -> w_l^-1 u w_r, stored as the canonical representative of the sign
/// class {(w_l, w_r), (-w_l, -w_r)}.
///
/// Sign rule: scanning the 8 complex components of (w_l, w_r) row-major,
/// the first component with modulus > kNormTol must have positive real
/// part, or positive imaginary part when its real part is below kNormTol.
class RotationPair {
 public:
  RotationPair() = default;  // identity (e, e)
  RotationPair(const UnitSpinor& l, const UnitSpinor& r) : left_(l), right_(r) {
    canonicalize();
  }

  /// The orientation-preserving point inversion u -> -u, class of (-e, e).
  static RotationPair inversion();

  const UnitSpinor& left() const { return left_; }
  const UnitSpinor& right() const { return right_; }

  /// Componentwise product (w_l w_l', w_r w_r'); words read left to right.
  RotationPair operator*(const RotationPair& o) const {
    return {left_ * o.left_, right_ * o.right_};
  }
  RotationPair inverse() const { return {left_.adjoint(), right_.adjoint()}; }

  /// w_l^-1 u w_r; identical for both sign representatives.
  UnitSpinor act(const UnitSpinor& u) const {
    return left_.adjoint() * u * right_;
  }
  Point4 act(const Point4& x) const { return spinor_to_point(act(point_to_spinor(x))); }

  /// 4x4 orthogonal matrix R with R x = spinor_to_point(act(point_to_spinor(x))).
  /// Note R(g h) = R(h) R(g): the pair action composes as a right action on
  /// points even though T_g on functions is a homomorphism.
  Eigen::Matrix4d to_so4() const;

  CanonicalKey key() const;

  /// Max entrywise distance between the canonical representatives.
  double distance(const RotationPair& o) const {
    return std::max(left_.distance(o.left_), right_.distance(o.right_));
  }
  bool is_identity(double tol = kTableTol) const {
    return distance(RotationPair()) < tol;
  }

  static RotationPair random(std::mt19937_64& rng);

 private:
  void canonicalize();

  UnitSpinor left_, right_;
};

}  // namespace octaharm
