#pragma once

#include <stdexcept>

namespace octaharm {

// Error taxonomy shared by all modules; each type names the violated
// contract rather than the call site that raised it.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormError : Error { using Error::Error; };           // vector not on S^3
struct UnitarityError : Error { using Error::Error; };      // matrix not special-unitary
struct DivergenceError : Error { using Error::Error; };     // closure exceeded element cap
struct ClosureOrderError : Error { using Error::Error; };   // deck closure != 24 elements
struct DegeneracyError : Error { using Error::Error; };     // duplicate tile centers
struct StructureError : Error { using Error::Error; };      // subgroup structure check failed
struct TableError : Error { using Error::Error; };          // stored reference data mismatch
struct NumericsError : Error { using Error::Error; };       // independent routes disagree
struct RankAmbiguityError : Error { using Error::Error; };  // singular value in gray zone
struct DomainError : Error { using Error::Error; };         // argument outside supported domain

}  // namespace octaharm
