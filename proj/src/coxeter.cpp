#include "octaharm/coxeter.hpp"

#include <cmath>
#include <deque>
#include <unordered_map>

namespace octaharm {

namespace {

std::array<WeylReflection, 5> build_weyl_table() {
  const double s = std::sqrt(0.5);
  const std::array<Point4, 5> vectors{
      Point4{1.0, 0.0, 0.0, 0.0},   // a_0
      Point4{0.0, s, -s, 0.0},      // a_1
      Point4{0.0, 0.0, -s, s},      // a_2
      Point4{0.0, 0.0, 0.0, 1.0},   // a_3
      Point4{0.5, 0.5, 0.5, 0.5},   // a_4
  };

  // Stored spinor constants, theta = exp(i pi/4). Kept independent of
  // point_to_spinor so the two routes check each other.
  const complexd theta(s, s), theta_bar(s, -s);
  const std::array<std::array<complexd, 2>, 5> rows{{
      {complexd(1.0, 0.0), complexd(0.0, 0.0)},        // v_0 = e
      {complexd(0.0, 0.0), theta_bar},                 // v_1
      {complexd(0.0, -s), complexd(s, 0.0)},           // v_2
      {complexd(0.0, -1.0), complexd(0.0, 0.0)},       // v_3
      {s * theta_bar, -s * theta},                     // v_4
  }};

  std::array<WeylReflection, 5> table{};
  for (int i = 0; i < 5; ++i) {
    const UnitSpinor stored = UnitSpinor::from_upper_row(rows[i][0], rows[i][1]);
    const UnitSpinor computed = point_to_spinor(vectors[i]);
    if (stored.distance(computed) > 1e-15) {
      throw TableError("mirror table: stored v_s disagrees with point_to_spinor(a_s)");
    }
    table[i] = WeylReflection{i, vectors[i], stored};
  }
  return table;
}

void check_index(int s) {
  if (s < 0 || s > 4) throw DomainError("reflection index must be in {0..4}");
}

CanonicalKey matrix_key(const Eigen::Matrix4d& m) {
  std::array<double, 16> entries{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) entries[4 * r + c] = m(r, c);
  return quantize16(entries);
}

}  // namespace

const std::array<WeylReflection, 5>& weyl_table() {
  static const std::array<WeylReflection, 5> table = build_weyl_table();
  return table;
}

Point4 reflect(const Point4& x, int s) {
  check_index(s);
  const Point4& a = weyl_table()[s].vector;
  const double p = 2.0 * x.dot(a);
  return {x.x0 - p * a.x0, x.x1 - p * a.x1, x.x2 - p * a.x2, x.x3 - p * a.x3};
}

Eigen::Matrix4d reflection_matrix(int s) {
  check_index(s);
  const Eigen::Vector4d a = weyl_table()[s].vector.vector();
  return Eigen::Matrix4d::Identity() - 2.0 * a * a.transpose();
}

RotationPair rotation_pair(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw DomainError("rotation_pair requires distinct mirror indices");
  const UnitSpinor& vi = weyl_table()[i].spinor;
  const UnitSpinor& vj = weyl_table()[j].spinor;
  return {vi * vj.adjoint(), vi.adjoint() * vj};
}

ReflectionGroupClosure::ReflectionGroupClosure(std::vector<Eigen::Matrix4d> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(matrix_key(elements_[i]), i);
  }
}

bool ReflectionGroupClosure::contains(const Eigen::Matrix4d& m) const {
  return index_.count(matrix_key(m)) > 0;
}

ReflectionGroupClosure close_group(const std::vector<Eigen::Matrix4d>& generators,
                                   std::size_t cap) {
  for (const auto& g : generators) {
    if (((g.transpose() * g) - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() > kNormTol) {
      throw NormError("close_group: generator is not orthogonal");
    }
  }

  std::vector<Eigen::Matrix4d> elements;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen;
  std::deque<std::size_t> worklist;

  elements.push_back(Eigen::Matrix4d::Identity());
  seen.emplace(matrix_key(elements.front()), 0);
  worklist.push_back(0);

  while (!worklist.empty()) {
    const std::size_t cur = worklist.front();
    worklist.pop_front();
    for (const auto& g : generators) {
      const Eigen::Matrix4d next = elements[cur] * g;
      const CanonicalKey key = matrix_key(next);
      if (seen.count(key)) continue;
      if (elements.size() >= cap) {
        throw DivergenceError("close_group: element count exceeded cap");
      }
      seen.emplace(key, elements.size());
      elements.push_back(next);
      worklist.push_back(elements.size() - 1);
    }
  }
  return ReflectionGroupClosure(std::move(elements));
}

bool cross_check_pair_vs_reflections(int i, int j) {
  const Eigen::Matrix4d via_pair = rotation_pair(i, j).to_so4();
  // (W_i W_j) read left to right: apply mirror i first, then mirror j.
  const Eigen::Matrix4d via_mirrors = reflection_matrix(j) * reflection_matrix(i);
  return (via_pair - via_mirrors).cwiseAbs().maxCoeff() < kTableTol;
}

}  // namespace octaharm
