#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "octaharm/deck.hpp"
#include "octaharm/harmonics.hpp"

namespace octaharm {

/// P = (1/24) sum_g pair_action(j, g), Hermitian-symmetrized. Idempotent and
/// intertwined by every pair_action of the group (residuals < kBasisTol).
Eigen::MatrixXcd projector(Spin j, const DeckGroup& d);

struct BasisLabel {
  enum class Kind { Singlet, Plus, Minus };
  int rho = 0;
  int m2 = 0;
  Kind kind = Kind::Singlet;

  const char* kind_name() const;
  std::string text() const;
};

/// Orthonormal coefficient vectors (columns) spanning an invariant subspace
/// of the degree-2j coefficient space.
struct InvariantBasis {
  ManifoldId manifold = ManifoldId::N4;
  int two_j = 0;
  std::string frame;                   // "original" or "c-rotated"
  Eigen::MatrixXcd vectors;            // (2j+1)^2 rows, one column per vector
  std::vector<BasisLabel> labels;      // closed-form bases only
  std::vector<double> leading_values;  // projector eigenvalues (numeric route)

  int count() const { return static_cast<int>(vectors.cols()); }
};

/// Numeric basis: dominant eigenvectors of the projector, ordered by
/// descending eigenvalue. Rank is taken at the kRankCutoff cutoff; values
/// inside [1e-8, 1e-4] raise RankAmbiguityError, and a rank that disagrees
/// with the character multiplicity raises NumericsError.
InvariantBasis invariant_basis(Spin j, const DeckGroup& d);

/// Stored frame rotation c diagonalizing the order-3 left generator of the
/// N4 group: c^dag (-alpha2) c = diag(exp(2pi i/3), exp(-2pi i/3)).
/// Construction validates the identity, unitarity, and the determinant
/// phase det c = exp(-i pi/4); TableError on any failure.
class Diagonalizer {
 public:
  Diagonalizer();

  const Eigen::Matrix2cd& matrix() const { return c_; }
  /// Copy rescaled by exp(i pi/8) so the determinant is exactly 1; spans and
  /// conjugations are insensitive to this phase.
  UnitSpinor unit_spinor() const;

 private:
  Eigen::Matrix2cd c_;
};

Diagonalizer n4_diagonalizer();

/// Closed-form N4 basis in the rotated frame u' = c^dag u. Selection rules:
/// m1 = rho = 0 mod 3 always; odd j >= 3 takes even m2 in (0, j] with the
/// minus combination; even j takes the m2 = 0 singlet plus even m2 in (0, j]
/// with the plus combination. Vectors are unit-normalized and sorted by
/// (rho, m2, kind). DomainError on half-integer spin.
InvariantBasis n4_closed_form_basis(Spin j);

/// Number of closed-form labels for integer spin j (the counting rule).
int n4_closed_form_count(Spin j);

/// Rewrites a c-rotated basis in the original frame via the frame rotation's
/// coefficient action.
InvariantBasis to_original_frame(const InvariantBasis& rotated);

/// True iff both spans coincide: equal dimension and largest principal angle
/// below tol (measured through its sine). Writes a reason to diagnostics on
/// mismatch when provided.
bool compare_spans(const InvariantBasis& a, const InvariantBasis& b,
                   double tol = kSpanTol, std::string* diagnostics = nullptr);

}  // namespace octaharm
