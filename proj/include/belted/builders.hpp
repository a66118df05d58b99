#pragma once

#include "belted/polytope.hpp"

namespace belted::build {

/// Tetrahedron, f = (4, 6, 4).
Polytope simplex();

/// Cube with F0 ∩ F1 ∩ F2 a vertex and opposite pairs (0,3), (1,4), (2,5).
Polytope cube();

/// k-gonal prism: two k-gons and k quadrangles, m = k + 2.
Polytope prism(int k);

/// Dual of the icosahedron, f = (20, 30, 12).
Polytope dodecahedron();

/// Pentagonal cap ring structure around two hexagons: 12 pentagons, 2 hexagons.
Polytope barrel();

/// (5,0) nanotube with k rings of five hexagons; d_k(0) is the dodecahedron.
Polytope d_k(int k);

/// Truncated icosahedron, f = (60, 90, 32).
Polytope c60();

/// Two n-gonal caps joined by a zigzag tube: cap, n pentagons, k rings of n
/// hexagons, n pentagons, cap. tube(5, k) = D_k, tube(6, 0) = barrel.
Polytope tube(int cap, int rings);

}  // namespace belted::build
