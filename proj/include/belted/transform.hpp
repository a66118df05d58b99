#pragma once

// Combinatorial surgeries on simple 3-polytopes.

#include <optional>
#include <string>
#include <vector>

#include "belted/polytope.hpp"

namespace belted {

/// Cut s consecutive edges of facet `facet`: the run starts at position
/// `start` of its cycle c, i.e. edges (c[start], c[start+1]) ... (c[start+s-1], c[start+s]).
/// The cut meets the flanking edges E1 = (c[start-1], c[start]) and
/// E2 = (c[start+s], c[start+s+1]). s = 0 cuts off the vertex c[start].
struct TruncationSpec {
  int facet = 0;
  int start = 0;
  int s = 0;

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// The run starting with the dart u -> v of the facet.
TruncationSpec spec_from_dart(const Polytope& p, int facet, int u, int v, int s);

struct TruncationSignature {
  int s = 0;
  int k = 0;   // gonality of the cut facet
  int m1 = 0;  // gonality of the facet across E1
  int m2 = 0;  // gonality of the facet across E2
};

/// Throws std::invalid_argument for an invalid spec.
TruncationSignature signature(const Polytope& p, const TruncationSpec& spec);

/// The cut facet keeps index `facet` as the (s+3)-gon F'; the (k-s+1)-gon F''
/// is appended as facet m. The two new vertices get ids f0 and f0 + 1, the
/// first on E1.
Polytope sk_truncate(const Polytope& p, const TruncationSpec& spec);

/// Every valid spec of P, ordered by facet, start, s.
std::vector<TruncationSpec> all_truncation_specs(const Polytope& p);

enum class Obstruction { None, Simplex, NotAdjacent, TriangularFlank, ThreeBelt };

std::string to_string(Obstruction o);

struct StraightenResult {
  std::optional<Polytope> polytope;
  Obstruction obstruction = Obstruction::None;
  /// For flag P: the result is not flag, because a 4-belt passes through F_i, F_j.
  bool loses_flagness = false;

  bool ok() const { return polytope.has_value(); }
};

/// Removes the edge F_i ∩ F_j, merging the two facets into facet min(i, j)
/// and contracting the two resulting 2-valent vertices. Facet and vertex ids
/// above the removed ones shift down by one (two for vertices).
StraightenResult straighten(const Polytope& p, int i, int j);

/// Operation I: p6 += f1, f0 -> 4 f0. Facets 0..m-1 are the shrunken originals.
Polytope chamfer(const Polytope& p);

/// Operation II: p6 += f0, f0 -> 3 f0. Facets 0..m-1 keep their gonality.
Polytope leapfrog(const Polytope& p);

/// chamfer(leapfrog(P)) and leapfrog(chamfer(P)) have the same canonical code.
bool op_commute_check(const Polytope& p);

}  // namespace belted
