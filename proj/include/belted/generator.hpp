#pragma once

// Enumeration of fullerenes through singular fullerenes, starting from the
// dodecahedron and applying seven kinds of (s,k;m1,m2)-truncation.

#include <map>
#include <string>
#include <vector>

#include "belted/canonical.hpp"
#include "belted/polytope.hpp"
#include "belted/transform.hpp"

namespace belted {

/// (1;4,5), (1;5,5), (2,6;4,5), (2,6;5,5), (2,6;5,6), (2,7;5,5), (2,7;5,6).
bool allowed_signature(const TruncationSignature& sig);

/// Specs of an allowed signature whose result stays in the singular-fullerene family.
std::vector<TruncationSpec> applicable_truncations(const Polytope& p);

struct GeneratorOptions {
  bool chiral = false;  // report enantiomers separately
  int threads = 0;      // 0: hardware concurrency
  bool verify = true;   // assert the belt theorems on every member
};

struct Catalog {
  int p6_max = 0;
  bool chiral = false;
  /// Fullerenes by p6, mirror-identified canonical codes in increasing order,
  /// with a representative polytope for each.
  std::map<int, std::vector<CanonicalCode>> codes;
  std::map<int, std::vector<Polytope>> fullerenes;
  std::map<int, long> counts;          // mirror pairs counted once
  std::map<int, long> chiral_counts;   // mirror pairs counted twice
  std::map<int, long> level_sizes;     // family members per facet count
  long truncations_applied = 0;

  const std::map<int, long>& reported() const { return chiral ? chiral_counts : counts; }
};

/// All fullerenes with p6 <= p6_max. Throws IdentityViolation if a member of
/// the family breaks the belt theorems (only with options.verify).
Catalog generate(int p6_max, const GeneratorOptions& options = {});

enum class IcosahedralOp { T1, T2 };

/// Folds chamfer (T1) and leapfrog (T2) over the dodecahedron, left to right.
Polytope icosahedral_word(const std::vector<IcosahedralOp>& word);

}  // namespace belted
