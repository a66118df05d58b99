#pragma once

// Characteristic matrices from facet colourings and the cohomology ring
// Z[v_1..v_m] / (SR ideal + linear relations) of the resulting quasitoric
// manifold.

#include <array>
#include <string>
#include <vector>

#include "belted/nerve.hpp"
#include "belted/polytope.hpp"
#include "belted/scalar.hpp"

namespace belted {

/// colour[i] in 1..4 for facet i.
using Coloring = std::vector<int>;

/// Proper facet colouring with at most four colours. Backtracking over facets
/// ordered by gonality (descending) then index, smallest colour first, so the
/// result is reproducible.
Coloring four_color(const Polytope& p);

bool is_proper_coloring(const Polytope& p, const Coloring& c);

struct CharMatrix {
  IntMatrix lambda;             // 3 x m, column i = e_{colour(i)}, e_4 = (1,1,1)
  Coloring coloring;
  std::vector<Integer> minors;  // per vertex: det of the columns of its facets, ascending
};

/// Throws std::invalid_argument if some vertex minor is not ±1 (in particular
/// for colourings that are not proper).
CharMatrix char_matrix(const Polytope& p, const Coloring& coloring);

inline CharMatrix char_matrix(const Polytope& p) { return char_matrix(p, four_color(p)); }

/// True iff the columns of lambda (n x m) over every maximal simplex of K
/// form a basis of Z^n.
bool is_characteristic(const NerveComplex& k, const IntMatrix& lambda);

/// Lexicographically smallest vertex, as its ascending facet triple.
std::array<int, 3> pivot_facets(const Polytope& p);

/// Λ_P^{-1} Λ for the pivot facets P: the identity in those columns.
IntMatrix normalize(const Polytope& p, const CharMatrix& cm);

struct RingPresentation {
  NerveComplex complex;
  IntMatrix linear;               // row r is the relation Σ_i linear(r, i) v_i
  std::vector<Mask> sr_relations; // square-free monomials over minimal nonfaces

  int m() const { return complex.vertex_count(); }
  int n() const { return static_cast<int>(linear.rows()); }
};

RingPresentation presentation(const Polytope& p, const CharMatrix& cm);
RingPresentation presentation(NerveComplex k, IntMatrix lambda);

/// Ranks of the graded pieces in degrees 0, 2, ..., 2(n + 1); the last entry
/// must vanish. Exact rational linear algebra on Z[K]_d modulo θ·Z[K]_{d-1}.
std::vector<long> cohomology_ranks(const RingPresentation& pres);

struct CharClasses {
  std::array<int, 3> pivots;
  std::vector<Integer> c1;  // coefficient of v_i in the reduced c_1; zero at pivots
  std::string c1_text;
  std::string chern_text;       // C = (1+v1)...(1+vm)
  std::string pontryagin_text;  // P = (1+v1^2)...(1+vm^2)
};

/// c_1 = Σ v_i with the pivot variables eliminated via the linear relations.
CharClasses char_class_presentation(const Polytope& p, const CharMatrix& cm);

/// Monomial text, 1-based: "v1*v2*v5".
std::string monomial_text(Mask s);

}  // namespace belted
