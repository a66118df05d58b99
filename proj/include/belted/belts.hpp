#pragma once

// k-belts, flagness, singular-fullerene classification and zigzag cycles.

#include <optional>
#include <string>
#include <vector>

#include "belted/polytope.hpp"

namespace belted {

/// Cyclic facet sequence; stored starting at its least facet, with
/// facets[1] < facets[k-1], i.e. lexicographically least of the 2k symmetries.
struct Belt {
  std::vector<int> facets;

  int k() const { return static_cast<int>(facets.size()); }
  friend bool operator==(const Belt&, const Belt&) = default;
  friend auto operator<=>(const Belt&, const Belt&) = default;
};

/// Rotates/reflects a cyclic facet sequence into the stored form.
Belt canonical_belt(std::vector<int> cyclic);

/// All k-belts, sorted. k >= 3.
std::vector<Belt> k_belts(const Polytope& p, int k);

bool is_flag(const Polytope& p);

/// Whether the facets adjacent to F_i, in cyclic order, form a belt.
bool facet_surrounded_by_belt(const Polytope& p, int i);

enum class ClassKind { Fullerene, SingularQuad, SingularHept, NonMember };

std::string to_string(ClassKind kind);

struct Classification {
  ClassKind kind = ClassKind::NonMember;
  /// Fullerene: empty. SingularQuad: {quadrangle}. SingularHept: {heptagon}
  /// followed by the two pentagons of an F5567 fragment when one exists.
  std::vector<int> detail;
  /// SingularHept accepted only because there are no adjacent pentagons, so the
  /// "every adjacent pentagon pair" clause holds vacuously.
  bool vacuous_pentagon_clause = false;

  bool in_family() const { return kind != ClassKind::NonMember; }
};

Classification classify(const Polytope& p);

struct FiveBeltStructure {
  int count = 0;
  std::optional<int> dk_index;
};

/// For a fullerene: 12 five-belts, or 12 + k exactly when P is D_k.
/// Throws std::invalid_argument for non-fullerenes and IdentityViolation when
/// the count contradicts the D_k characterisation.
FiveBeltStructure five_belt_structure(const Polytope& p);

/// Zigzag cycles as closed vertex walks, each once, rotated/reflected to the
/// least representative and sorted.
std::vector<std::vector<int>> zigzag_cycles(const Polytope& p);

/// Whether some 4-belt is not the ring of neighbours of a quadrangle.
bool has_4belt_not_surrounding_quad(const Polytope& p);

}  // namespace belted
