#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "octaharm/algebra.hpp"

namespace octaharm {

/// Mirror s in {0..4}: unit Weyl vector a_s and its attached spinor
/// v_s = point_to_spinor(a_s).
struct WeylReflection {
  int index;
  Point4 vector;
  UnitSpinor spinor;
};

/// The four diagram mirrors plus the extra mirror W_0, indexed by s.
/// Construction cross-checks each v_s against the stored constants
/// within 1e-15.
const std::array<WeylReflection, 5>& weyl_table();

/// x -> x - 2 (x . a_s) a_s. Involutive; fixes the hyperplane a_s . x = 0.
Point4 reflect(const Point4& x, int s);

/// 4x4 matrix of reflect(., s): I - 2 a_s a_s^T.
Eigen::Matrix4d reflection_matrix(int s);

/// (W_i W_j) -> (v_i v_j^-1, v_i^-1 v_j), canonicalized. Its point action
/// applies W_i first, then W_j.
RotationPair rotation_pair(int i, int j);

/// Product closure of orthogonal 4x4 generators, keyed on the kKeyTol grid.
class ReflectionGroupClosure {
 public:
  explicit ReflectionGroupClosure(std::vector<Eigen::Matrix4d> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Eigen::Matrix4d>& elements() const { return elements_; }
  bool contains(const Eigen::Matrix4d& m) const;

 private:
  std::vector<Eigen::Matrix4d> elements_;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index_;
};

/// Breadth-first closure. Throws NormError on non-orthogonal generators and
/// DivergenceError when the element count exceeds `cap`.
ReflectionGroupClosure close_group(const std::vector<Eigen::Matrix4d>& generators,
                                   std::size_t cap = 10000);

/// True iff pair and reflection-product routes agree within kTableTol:
/// rotation_pair(i, j).to_so4() == matrix of (reflect by i, then by j).
/// Pins the left/right and composition-order conventions.
bool cross_check_pair_vs_reflections(int i, int j);

}  // namespace octaharm
