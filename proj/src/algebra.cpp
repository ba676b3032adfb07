#include "octaharm/algebra.hpp"

#include <cmath>
#include <sstream>

namespace octaharm {

double Point4::norm() const { return std::sqrt(dot(*this)); }

double Point4::distance(const Point4& o) const {
  const Point4 d{x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
  return d.norm();
}

Point4 Point4::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NormError("cannot normalize the zero vector");
  return {x0 / n, x1 / n, x2 / n, x3 / n};
}

Point4 Point4::random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point4 p{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return p.normalized();
}

UnitSpinor::UnitSpinor(complexd a, complexd b, complexd c, complexd d)
    : a_(a), b_(b) {
  if (std::abs(c + std::conj(b)) > kNormTol || std::abs(d - std::conj(a)) > kNormTol) {
    throw UnitarityError("matrix is not special-unitary: lower row must be (-conj(b), conj(a))");
  }
  const double n = std::abs(a) * std::abs(a) + std::abs(b) * std::abs(b);
  if (std::abs(n - 1.0) > kNormTol) {
    throw UnitarityError("matrix is not special-unitary: row norm differs from 1");
  }
}

UnitSpinor UnitSpinor::from_upper_row(complexd a, complexd b) {
  UnitSpinor u;
  u.a_ = a;
  u.b_ = b;
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) > kNormTol) {
    throw UnitarityError("spinor row norm differs from 1");
  }
  return u;
}

Eigen::Matrix2cd UnitSpinor::matrix() const {
  Eigen::Matrix2cd m;
  m << a_, b_, c(), d();
  return m;
}

double UnitSpinor::distance(const UnitSpinor& o) const {
  return std::max(std::abs(a_ - o.a_), std::abs(b_ - o.b_));
}

UnitSpinor UnitSpinor::random(std::mt19937_64& rng) {
  return point_to_spinor(Point4::random_unit(rng));
}

UnitSpinor point_to_spinor(const Point4& x) {
  if (std::abs(x.norm() - 1.0) > kNormTol) {
    throw NormError("point is not on S^3");
  }
  const complexd z1(x.x0, -x.x3);
  const complexd z2(-x.x2, -x.x1);
  return UnitSpinor::from_upper_row(z1, z2);
}

Point4 spinor_to_point(const UnitSpinor& u) {
  return {u.a().real(), -u.b().imag(), -u.b().real(), -u.a().imag()};
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  // FNV-1a over the quantized components.
  std::uint64_t h = 14695981039346656037ull;
  for (std::int64_t v : k.q) {
    auto u = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (u >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

CanonicalKey quantize16(const std::array<double, 16>& values) {
  CanonicalKey k;
  for (std::size_t i = 0; i < 16; ++i) {
    k.q[i] = static_cast<std::int64_t>(std::llround(values[i] / kKeyTol));
  }
  return k;
}

RotationPair RotationPair::inversion() {
  return {UnitSpinor().negated(), UnitSpinor()};
}

void RotationPair::canonicalize() {
  const std::array<complexd, 8> comps{left_.a(),  left_.b(),  left_.c(),  left_.d(),
                                      right_.a(), right_.b(), right_.c(), right_.d()};
  for (const complexd& z : comps) {
    if (std::abs(z) <= kNormTol) continue;
    const bool negate = (std::abs(z.real()) > kNormTol) ? z.real() < 0.0 : z.imag() < 0.0;
    if (negate) {
      left_ = left_.negated();
      right_ = right_.negated();
    }
    return;
  }
}

Eigen::Matrix4d RotationPair::to_so4() const {
  Eigen::Matrix4d r;
  for (int k = 0; k < 4; ++k) {
    Point4 basis{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0,
                 k == 3 ? 1.0 : 0.0};
    r.col(k) = act(basis).vector();
  }
  return r;
}

CanonicalKey RotationPair::key() const {
  const std::array<complexd, 8> comps{left_.a(),  left_.b(),  left_.c(),  left_.d(),
                                      right_.a(), right_.b(), right_.c(), right_.d()};
  std::array<double, 16> reals{};
  for (std::size_t i = 0; i < 8; ++i) {
    reals[2 * i] = comps[i].real();
    reals[2 * i + 1] = comps[i].imag();
  }
  return quantize16(reals);
}

RotationPair RotationPair::random(std::mt19937_64& rng) {
  return {UnitSpinor::random(rng), UnitSpinor::random(rng)};
}

}  // namespace octaharm
