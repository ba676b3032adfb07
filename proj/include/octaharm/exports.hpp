#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octaharm/deck.hpp"
#include "octaharm/projection.hpp"

namespace octaharm {

/// %.(sig)g rendering; JSON uses 17 significant digits (round-trips
/// doubles), CSV uses 12 (human-readable above every tolerance).
std::string format_double(double v, int significant);

/// Deck group export: per element the provenance word plus the 8 complex
/// entries of (w_l, w_r) as [re, im] pairs, row-major left then right.
std::string deck_group_json(const DeckGroup& d);

/// Invariant-basis export. `span_verdict` carries the closed-form/numeric
/// span comparison where one was computed; `note` explains empty bases.
std::string basis_json(const InvariantBasis& basis,
                       std::optional<bool> span_verdict = std::nullopt,
                       const std::string& note = {});

/// Rows (manifold, two_j, multiplicity) for two_j = 0..max_two_j.
std::string spectrum_csv(
    const std::vector<std::reference_wrapper<const DeckGroup>>& groups,
    int max_two_j);

/// 24 center rows per group followed by one matching block per ordered
/// group pair (bijection indices within kBasisTol).
std::string centers_csv(
    const std::vector<std::reference_wrapper<const DeckGroup>>& groups);

}  // namespace octaharm
