#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "octaharm/algebra.hpp"

namespace octaharm {

enum class ManifoldId { N4, N5, N6 };

inline constexpr std::array<ManifoldId, 3> kAllManifolds{
    ManifoldId::N4, ManifoldId::N5, ManifoldId::N6};

const char* to_string(ManifoldId m);
std::optional<ManifoldId> manifold_from_string(std::string_view name);

/// One word token (W_i W_j); a full word is the token list followed by the
/// inversion J4 (stored words always end with it, as printed).
struct WordToken {
  int i;
  int j;
};

struct GeneratorWord {
  std::vector<WordToken> rotations;
  bool ends_with_inversion = true;

  std::string text() const;
};

/// The stored generator words of the three deck groups.
std::array<GeneratorWord, 4> generator_words(ManifoldId m);

/// Left-to-right componentwise product of the token pairs, canonicalized.
RotationPair evaluate_word(const GeneratorWord& w);

struct DeckElement {
  RotationPair pair;
  std::string word;  // provenance in generators g1..g4; "e" for identity
};

/// Closed set of 24 rotation pairs with generator provenance. Construction
/// validates order, closure and the identity; ClosureOrderError otherwise.
class DeckGroup {
 public:
  static constexpr std::size_t kOrder = 24;

  DeckGroup(ManifoldId m, std::vector<DeckElement> elements,
            std::array<RotationPair, 4> generators);

  ManifoldId manifold() const { return manifold_; }
  const std::vector<DeckElement>& elements() const { return elements_; }
  const std::array<RotationPair, 4>& generators() const { return generators_; }
  const RotationPair& element(std::size_t i) const { return elements_[i].pair; }

  std::optional<std::size_t> index_of(const RotationPair& g) const;
  std::size_t identity_index() const { return identity_; }
  std::size_t product_index(std::size_t i, std::size_t j) const {
    return mult_[i][j];
  }
  /// Smallest n >= 1 with g^n = identity in the sign-class group.
  int element_order(std::size_t i) const;

 private:
  ManifoldId manifold_;
  std::vector<DeckElement> elements_;
  std::array<RotationPair, 4> generators_;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index_;
  std::vector<std::array<std::uint8_t, kOrder>> mult_;
  std::size_t identity_ = 0;
};

/// Closure of the four evaluated generator words; exactly 24 elements.
DeckGroup build_deck_group(ManifoldId m);

/// Tile centers w_l^-1 w_r per element; throws DegeneracyError on
/// duplicates (a free action never fixes a tile twice).
std::vector<Point4> center_positions(const DeckGroup& d);

/// True iff the two 24-point center sets match under nearest-neighbor
/// bijection within tol.
bool compare_center_sets(const DeckGroup& a, const DeckGroup& b,
                         double tol = kBasisTol);

struct GroupDescriptor {
  std::map<int, int> order_histogram;
  int center_size = 0;
  bool abelian = false;
  std::string matched_template;  // empty when no catalog template matches

  bool operator==(const GroupDescriptor&) const = default;
};

/// Order histogram, center size, commutativity, and isomorphism test
/// against the two catalog templates (binary tetrahedral <2,3,3> and
/// C3 x Q8) via generator-relation matching on exact integer models.
GroupDescriptor identify_group(const DeckGroup& d);

struct CheckReport {
  struct Item {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string detail;
  };
  std::vector<Item> items;

  bool all_pass() const;
  double max_residual() const;
  std::string first_failure() const;
};

/// N4 structure: generator cubes span the right quaternion subgroup, fourth
/// powers the left 3-cycle, the two commute, intersect trivially, and their
/// products exhaust the group. Throws StructureError unless disabled.
CheckReport verify_n4_structure(const DeckGroup& d, bool throw_on_failure = true);

/// N6 checks: closure equals the stored 24-element set, all 144 stored
/// products reproduced, and the unit relations hold. Throws TableError
/// naming the offending cell unless disabled.
CheckReport verify_t24_tables(const DeckGroup& d, bool throw_on_failure = true);

/// Face pairings and signed edge triples (reference data, report use only).
struct GluingScheme {
  std::array<std::array<int, 2>, 4> faces;
  std::array<std::array<int, 3>, 4> edges;
};

GluingScheme gluing_data(ManifoldId m);

}  // namespace octaharm
