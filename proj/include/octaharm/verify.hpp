#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octaharm/deck.hpp"

namespace octaharm {

/// Test-fixture corruption hooks for exercising failure paths end to end.
enum class FaultInjection { None, Table61Alpha1 };

struct VerifyOptions {
  std::vector<ManifoldId> manifolds{ManifoldId::N4, ManifoldId::N5, ManifoldId::N6};
  std::uint64_t seed = 0;
  double table_tol = kTableTol;
  double basis_tol = kBasisTol;
  FaultInjection fault = FaultInjection::None;
};

struct VerifyReport {
  CheckReport checks;
  std::vector<std::string> tables_covered;
  bool coverage_complete = false;

  bool all_pass() const { return checks.all_pass(); }
  /// One line per check plus a coverage footer.
  std::string text() const;
};

/// Runs every stored-table and structure check for the selected manifolds:
/// mirror constants, Coxeter closure orders, conversion cross-checks, word
/// evaluation against the generator tables, deck closures, element sets,
/// centers, free action, representation spot checks, and the closed-form
/// basis comparison.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace octaharm
