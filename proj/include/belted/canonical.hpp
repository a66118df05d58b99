#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "belted/polytope.hpp"

namespace belted {

enum class OrientationClass { AsGiven, Mirrored };

/// Complete invariant of a polytope up to relabelling (and, optionally, mirroring).
///
/// The code is the lexicographically least breadth-first traversal string over
/// all starting darts; equality of codes is combinatorial equivalence.
struct CanonicalCode {
  std::vector<std::uint32_t> code;
  /// Which orientation attains the minimum (AsGiven on ties).
  OrientationClass orientation_class = OrientationClass::AsGiven;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) { return a.code == b.code; }
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.code <=> b.code; }

  std::string hex() const;
};

CanonicalCode canonical_code(const Polytope& p, bool allow_mirror);

/// True iff no combinatorial self-equivalence reverses orientation.
bool is_combinatorially_chiral(const Polytope& p);

}  // namespace belted
