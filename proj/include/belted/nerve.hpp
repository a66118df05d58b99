#pragma once

// The nerve K_P of a simple polytope and reduced (co)homology of its full
// subcomplexes over Z.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "belted/polytope.hpp"
#include "belted/scalar.hpp"

namespace belted {

/// Subset of [m] as a bit mask; m <= 64.
using Mask = std::uint64_t;

inline int popcount(Mask s) { return __builtin_popcountll(s); }

/// Simplicial complex on vertices 0..m-1, closed under subsets.
class NerveComplex {
 public:
  /// Downward closure of the given simplices.
  NerveComplex(int vertex_count, const std::vector<Mask>& generators);

  /// Nerve of the facets of P: a simplex per nonempty facet intersection.
  static NerveComplex of(const Polytope& p);

  /// Boundary of a k-gon: nerve of the facets (edges) of a polygon.
  static NerveComplex polygon(int k);

  int vertex_count() const { return m_; }
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }
  bool contains(Mask s) const { return s == 0 || faces_.count(s) > 0; }

  /// Simplices with `size` vertices (size 0 is the empty simplex), sorted.
  const std::vector<Mask>& simplices(int size) const;
  /// (f_0, f_1, ...) counting simplices of dimension 0, 1, ...
  std::vector<long> f_vector() const;

  /// Inclusion-minimal subsets of [m] not in K, sorted by size then value.
  std::vector<Mask> minimal_nonfaces() const;

 private:
  int m_;
  std::unordered_set<Mask> faces_;
  std::vector<std::vector<Mask>> by_size_;
  std::vector<Mask> empty_;
};

struct HomologyGroup {
  long rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Groups for degrees q = -1 .. dim(K).
struct GradedGroups {
  std::vector<HomologyGroup> groups;  // groups[q + 1]

  const HomologyGroup& at(int q) const { return groups[static_cast<std::size_t>(q + 1)]; }
  int top_degree() const { return static_cast<int>(groups.size()) - 2; }
};

/// Reduced simplicial homology of K_ω (augmented with C_{-1} = Z), by Smith
/// normal form of the boundary matrices. Works in 64-bit arithmetic and
/// repeats the computation with big integers on overflow.
GradedGroups reduced_homology(const NerveComplex& k, Mask omega);

/// Reduced cohomology of K_ω from the coboundary matrices; used to cross-check
/// ranks (and the shift of torsion) against reduced_homology.
GradedGroups reduced_cohomology(const NerveComplex& k, Mask omega);

}  // namespace belted
