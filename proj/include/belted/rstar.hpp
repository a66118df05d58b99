#pragma once

// The cellular cochain algebra R*(P) = Λ[u_1..u_m] ⊗ Z[K] / (u_i v_i, v_i²)
// with d u_i = v_i, d v_i = 0.

#include <compare>
#include <map>
#include <utility>

#include "belted/nerve.hpp"

namespace belted {

/// v_σ u_A with σ ∩ A = ∅ and σ ∈ K; u_A is the increasing exterior product.
struct Monomial {
  Mask v = 0;
  Mask u = 0;

  int total_degree() const { return 2 * popcount(v) + popcount(u); }
  /// (-|A|, σ ∪ A), standing for multidegree (-|A|, 2(σ ∪ A)).
  std::pair<int, Mask> multidegree() const { return {-popcount(u), v | u}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct RStarClass {
  std::map<Monomial, Integer> terms;  // no zero coefficients

  static RStarClass unit() { return monomial(0, 0); }
  static RStarClass monomial(Mask v, Mask u, const Integer& c = 1);

  void add(const Monomial& x, const Integer& c);
  bool is_zero() const { return terms.empty(); }
  /// Common multidegree; throws std::invalid_argument when inhomogeneous.
  std::pair<int, Mask> multidegree() const;

  friend RStarClass operator+(RStarClass a, const RStarClass& b);
  friend RStarClass operator-(RStarClass a, const RStarClass& b);
  friend RStarClass operator*(const Integer& c, RStarClass a);
  friend bool operator==(const RStarClass&, const RStarClass&) = default;
};

/// Sign of u_A u_B = ±u_{A⊔B}: (-1)^{#{(a,b) in A×B : a > b}}.
int exterior_sign(Mask a, Mask b);

/// Product in R*(P). Both arguments must be homogeneous.
RStarClass rstar_product(const NerveComplex& k, const RStarClass& a, const RStarClass& b);

RStarClass rstar_differential(const NerveComplex& k, const RStarClass& a);

/// Whether a homogeneous x lies in d(R*) over Z, i.e. [x] = 0 when x is a cocycle.
bool is_coboundary(const NerveComplex& k, const RStarClass& x);

/// Whether every product [u_i v_j][u_k v_l] of degree-3 classes vanishes.
bool h3_squared_trivial(const Polytope& p);

}  // namespace belted
