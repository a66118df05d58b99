#pragma once

// Bigraded Betti numbers β^{-i,2ω} = rank H̃^{|ω|-i-1}(K_ω) of moment-angle
// complexes, their closed forms, and the identities they satisfy.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belted/nerve.hpp"

namespace belted {

enum class BettiMode { Full, UpToJ, Shortcuts };

/// Nonzero ranks for one ω.
struct OmegaBetti {
  Mask omega = 0;
  std::map<int, long> rank;                      // i -> β^{-i,2ω}
  std::map<int, std::vector<Integer>> torsion;  // i -> torsion of H^{-i,2ω}
};

struct BettiTable {
  int m = 0;
  int n = 0;  // dimension of the polytope
  BettiMode mode = BettiMode::Full;
  int j_max = 0;                             // UpToJ only
  std::map<std::pair<int, int>, long> ranks;  // (i, j) -> β^{-i,2j}, nonzero or computed entries
  std::vector<OmegaBetti> per_omega;          // Full / UpToJ, sorted by ω, nonzero ω only

  /// β^{-i,2j}; zero when absent.
  long operator()(int i, int j) const;
  /// Whether (i, j) was computed in this mode.
  bool has(int i, int j) const;
  bool torsion_free() const;
  /// Total rank in each degree 2j - i, for degrees 0 .. 2m.
  std::vector<long> graded_ranks() const;
};

struct BettiOptions {
  BettiMode mode = BettiMode::Full;
  int j_max = 3;
  int threads = 0;  // 0: hardware concurrency
};

/// n is the polytope dimension: K is a simplicial (n-1)-sphere.
BettiTable betti_bigraded(const NerveComplex& k, int n, const BettiOptions& options = {});
BettiTable betti_bigraded(const Polytope& p, const BettiOptions& options = {});

/// Maximum m accepted by the full subset sweep.
inline constexpr int kFullSweepLimit = 16;

struct ClosedForms {
  long h = 0;
  long b_1_4 = 0;          // h(h-1)/2
  long diff_2_6 = 0;       // β^{-2,6} - β^{-1,6} = (h²-1)(h-3)/3
  long diff_3_8 = 0;       // β^{-3,8} - β^{-2,8} = (h+1)h(h-2)(h-5)/8
  // Fullerene specialisations in terms of p6.
  long fullerene_b_1_4 = 0;  // (8+p6)(9+p6)/2
  long fullerene_b_2_6 = 0;  // (6+p6)(8+p6)(10+p6)/3
  long fullerene_b_3_8 = 0;  // (4+p6)(7+p6)(9+p6)(10+p6)/8
};

ClosedForms betti_closed_forms(int p6, int m);

/// β^{-i,2ω} = β^{-(m-n-i),2([m]\ω)} for every ω. Requires a Full table.
bool poincare_check(const BettiTable& t);

/// h-vector (h_0..h_n) of the polytope dual to K.
std::vector<long> h_vector(const NerveComplex& k, int n);

/// (1-t²)^{m-n} Σ h_k t^{2k} = Σ (-1)^i β^{-i,2j} t^{2j}, exactly. Requires a Full table.
bool poly_identity_check(const NerveComplex& k, const BettiTable& t);

/// JSON-style key "b_{i}_{2j}".
std::string betti_key(int i, int j);

}  // namespace belted
