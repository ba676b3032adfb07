#include "octaharm/projection.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "octaharm/tables.hpp"

namespace octaharm {

namespace {

constexpr double kRankGrayLow = 1e-8;
constexpr double kRankGrayHigh = 1e-4;

Eigen::MatrixXcd reshape_row_major(const Eigen::VectorXcd& v, int dim) {
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = v[r * dim + c];
  return m;
}

Eigen::VectorXcd flatten_row_major(const Eigen::MatrixXcd& m) {
  const int dim = static_cast<int>(m.rows());
  Eigen::VectorXcd v(dim * dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) v[r * dim + c] = m(r, c);
  return v;
}

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& v) {
  if (v.cols() == 0) return v;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
  Eigen::MatrixXcd q = qr.householderQ() *
                       Eigen::MatrixXcd::Identity(v.rows(), v.cols());
  return q;
}

}  // namespace

Eigen::MatrixXcd projector(Spin j, const DeckGroup& d) {
  const int n = j.dim() * j.dim();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (const DeckElement& el : d.elements()) p += pair_action(j, el.pair);
  p /= static_cast<double>(DeckGroup::kOrder);
  return 0.5 * (p + p.adjoint().eval());
}

const char* BasisLabel::kind_name() const {
  switch (kind) {
    case Kind::Singlet: return "singlet";
    case Kind::Plus: return "plus";
    case Kind::Minus: return "minus";
  }
  return "?";
}

std::string BasisLabel::text() const {
  std::ostringstream out;
  out << "rho=" << rho << " m2=" << m2 << " " << kind_name();
  return out.str();
}

InvariantBasis invariant_basis(Spin j, const DeckGroup& d) {
  const Eigen::MatrixXcd p = projector(j, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(p);
  if (solver.info() != Eigen::Success) {
    throw NumericsError("projector eigendecomposition failed");
  }

  const Eigen::VectorXd values = solver.eigenvalues();  // ascending
  const int n = static_cast<int>(values.size());
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    const double v = std::abs(values[k]);
    if (v > kRankGrayLow && v < kRankGrayHigh) {
      throw RankAmbiguityError("projector singular value in the ambiguous band [1e-8, 1e-4]");
    }
    if (v >= kRankCutoff) ++rank;
  }
  const int mult = multiplicity(j, d);
  if (rank != mult) {
    throw NumericsError("projector rank disagrees with character multiplicity");
  }

  InvariantBasis basis;
  basis.manifold = d.manifold();
  basis.two_j = j.two_j;
  basis.frame = "original";
  basis.vectors.resize(n, rank);
  basis.leading_values.resize(rank);
  for (int k = 0; k < rank; ++k) {
    basis.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    basis.leading_values[k] = values[n - 1 - k];
  }
  return basis;
}

Diagonalizer::Diagonalizer() : c_(tables::frame_rotation_matrix()) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  if (((c_.adjoint() * c_) - id).cwiseAbs().maxCoeff() > kTableTol) {
    throw TableError("frame rotation: stored matrix is not unitary");
  }
  const Eigen::Matrix2cd generator =
      -tables::named_spinor(tables::kAlpha2).matrix();
  Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
  expected(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  expected(1, 1) = std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
  if ((c_.adjoint() * generator * c_ - expected).cwiseAbs().maxCoeff() > kTableTol) {
    throw TableError("frame rotation: diagonalization identity failed");
  }
  const complexd det = c_(0, 0) * c_(1, 1) - c_(0, 1) * c_(1, 0);
  if (std::abs(det - std::polar(1.0, -std::numbers::pi / 4.0)) > kTableTol) {
    throw TableError("frame rotation: determinant phase is not exp(-i pi/4)");
  }
}

UnitSpinor Diagonalizer::unit_spinor() const {
  const Eigen::Matrix2cd scaled = std::polar(1.0, std::numbers::pi / 8.0) * c_;
  return UnitSpinor(scaled(0, 0), scaled(0, 1), scaled(1, 0), scaled(1, 1));
}

Diagonalizer n4_diagonalizer() { return Diagonalizer{}; }

int n4_closed_form_count(Spin j) {
  if (!j.is_integer()) throw DomainError("closed-form basis requires integer spin");
  const int jj = j.two_j / 2;
  const int n_rho = 2 * (jj / 3) + 1;
  const int n_m2 = jj / 2;  // even m2 in (0, j]
  if (jj % 2 == 1) return jj >= 3 ? n_rho * n_m2 : 0;
  return n_rho * (1 + n_m2);
}

InvariantBasis n4_closed_form_basis(Spin j) {
  if (!j.is_integer()) throw DomainError("closed-form basis requires integer spin");
  const int jj = j.two_j / 2;
  const int dim = j.dim();

  std::vector<BasisLabel> labels;
  for (int rho = -jj; rho <= jj; ++rho) {
    if (((rho % 3) + 3) % 3 != 0) continue;
    if (jj % 2 == 1) {
      if (jj < 3) continue;
      for (int m2 = 2; m2 <= jj; m2 += 2)
        labels.push_back({rho, m2, BasisLabel::Kind::Minus});
    } else {
      labels.push_back({rho, 0, BasisLabel::Kind::Singlet});
      for (int m2 = 2; m2 <= jj; m2 += 2)
        labels.push_back({rho, m2, BasisLabel::Kind::Plus});
    }
  }

  InvariantBasis basis;
  basis.manifold = ManifoldId::N4;
  basis.two_j = j.two_j;
  basis.frame = "c-rotated";
  basis.labels = labels;
  basis.vectors.resize(dim * dim, static_cast<int>(labels.size()));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const BasisLabel& lab = labels[k];
    Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(dim, dim);
    const int row = jj - lab.rho;
    if (lab.kind == BasisLabel::Kind::Singlet) {
      coeff(row, jj) = 1.0;
    } else {
      const double sign = lab.kind == BasisLabel::Kind::Minus ? -1.0 : 1.0;
      coeff(row, jj - lab.m2) = std::sqrt(0.5);
      coeff(row, jj + lab.m2) = sign * std::sqrt(0.5);
    }
    basis.vectors.col(static_cast<int>(k)) = flatten_row_major(coeff);
  }
  return basis;
}

InvariantBasis to_original_frame(const InvariantBasis& rotated) {
  if (rotated.frame != "c-rotated") {
    throw DomainError("to_original_frame expects a c-rotated basis");
  }
  const Spin j(rotated.two_j);
  const int dim = j.dim();
  // Coefficients transform by C = D(c~^dag)^T C'; the det-phase choice in
  // c~ multiplies every vector by one global phase and leaves spans intact.
  const Eigen::MatrixXcd u = wigner_d(j, n4_diagonalizer().unit_spinor().adjoint());

  InvariantBasis out = rotated;
  out.frame = "original";
  for (int k = 0; k < rotated.vectors.cols(); ++k) {
    const Eigen::MatrixXcd coeff = reshape_row_major(rotated.vectors.col(k), dim);
    out.vectors.col(k) = flatten_row_major(u.transpose() * coeff);
  }
  return out;
}

bool compare_spans(const InvariantBasis& a, const InvariantBasis& b, double tol,
                   std::string* diagnostics) {
  if (a.two_j != b.two_j) {
    if (diagnostics) *diagnostics = "spin mismatch";
    return false;
  }
  if (a.frame != b.frame) {
    if (diagnostics) *diagnostics = "frame mismatch: " + a.frame + " vs " + b.frame;
    return false;
  }
  if (a.vectors.cols() != b.vectors.cols()) {
    if (diagnostics) {
      std::ostringstream out;
      out << "dimension mismatch: " << a.vectors.cols() << " vs " << b.vectors.cols();
      *diagnostics = out.str();
    }
    return false;
  }
  if (a.vectors.cols() == 0) return true;

  const Eigen::MatrixXcd ua = orthonormal_columns(a.vectors);
  const Eigen::MatrixXcd ub = orthonormal_columns(b.vectors);
  // Residual of b against span(a); its top singular value is sin(theta_max).
  const Eigen::MatrixXcd residual = ub - ua * (ua.adjoint() * ub);
  const double sin_theta =
      residual.jacobiSvd().singularValues().maxCoeff();
  if (sin_theta >= tol) {
    if (diagnostics) {
      std::ostringstream out;
      out << "largest principal angle sine " << sin_theta;
      *diagnostics = out.str();
    }
    return false;
  }
  return true;
}

}  // namespace octaharm
