#include "belted/builders.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace belted::build {

namespace {

using Triangle = std::array<int, 3>;

std::vector<Triangle> icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<Triangle> t;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, u1 = 1 + (i + 1) % 5;
    int l = 6 + i, l1 = 6 + (i + 1) % 5;
    t.push_back({0, u, u1});
    t.push_back({u, l, u1});
    t.push_back({u1, l, l1});
    t.push_back({11, l, l1});
  }
  return t;
}

// Neighbours of v in cyclic order around it, following the link of v.
std::vector<int> link_cycle(const std::vector<Triangle>& tris, int v) {
  std::multimap<int, int> link;
  for (const auto& t : tris)
    for (int k = 0; k < 3; ++k)
      if (t[static_cast<std::size_t>(k)] == v) {
        int a = t[static_cast<std::size_t>((k + 1) % 3)], b = t[static_cast<std::size_t>((k + 2) % 3)];
        link.emplace(a, b);
        link.emplace(b, a);
      }
  std::vector<int> cyc{link.begin()->first};
  int prev = -1;
  for (;;) {
    int cur = cyc.back(), next = -1;
    auto [lo, hi] = link.equal_range(cur);
    for (auto it = lo; it != hi; ++it)
      if (it->second != prev) {
        next = it->second;
        break;
      }
    if (next == cyc.front()) break;
    prev = cur;
    cyc.push_back(next);
  }
  return cyc;
}

// Triangles around v in cyclic order, as indices into tris.
std::vector<int> triangles_around(const std::vector<Triangle>& tris, int v) {
  auto ring = link_cycle(tris, v);
  std::vector<int> out;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    int a = ring[k], b = ring[(k + 1) % ring.size()];
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto& tr = tris[t];
      auto has = [&](int x) { return tr[0] == x || tr[1] == x || tr[2] == x; };
      if (has(v) && has(a) && has(b)) out.push_back(static_cast<int>(t));
    }
  }
  return out;
}

}  // namespace

Polytope simplex() {
  return Polytope(orient_consistently({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}));
}

Polytope cube() {
  // Vertex id x + 2y + 4z; facets x=0, y=0, z=0, x=1, y=1, z=1.
  return Polytope(orient_consistently({
      {0, 2, 6, 4},
      {0, 1, 5, 4},
      {0, 1, 3, 2},
      {1, 3, 7, 5},
      {2, 3, 7, 6},
      {4, 5, 7, 6},
  }));
}

Polytope prism(int k) {
  if (k < 3) throw std::invalid_argument("prism: need k >= 3");
  std::vector<Cycle> facets(2);
  for (int i = 0; i < k; ++i) {
    facets[0].push_back(i);
    facets[1].push_back(k + i);
    facets.push_back({i, (i + 1) % k, k + (i + 1) % k, k + i});
  }
  return Polytope(orient_consistently(std::move(facets)));
}

Polytope dodecahedron() {
  auto tris = icosahedron();
  std::vector<Cycle> facets;
  for (int v = 0; v < 12; ++v) facets.push_back(triangles_around(tris, v));
  return Polytope(orient_consistently(std::move(facets)));
}

Polytope c60() {
  auto tris = icosahedron();
  // Vertex (v, w) is the corner of the truncated edge vw nearest v.
  std::map<std::pair<int, int>, int> corner;
  auto id = [&](int v, int w) {
    auto [it, fresh] = corner.emplace(std::make_pair(v, w), static_cast<int>(corner.size()));
    return it->second;
  };
  std::vector<Cycle> facets;
  for (int v = 0; v < 12; ++v) {
    Cycle pent;
    for (int w : link_cycle(tris, v)) pent.push_back(id(v, w));
    facets.push_back(std::move(pent));
  }
  for (const auto& [a, b, c] : tris)
    facets.push_back({id(a, b), id(b, a), id(b, c), id(c, b), id(c, a), id(a, c)});
  return Polytope(orient_consistently(std::move(facets)));
}

Polytope tube(int cap, int rings) {
  if (cap < 3 || rings < 0) throw std::invalid_argument("tube: need cap >= 3 and rings >= 0");
  const int n = cap;
  int next_id = 0;
  std::vector<int> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  for (int& v : top) v = next_id++;
  // Zigzag rings: up[j][i], down[j][i]; ring cycle up0 down0 up1 down1 ...
  std::vector<std::vector<int>> up(static_cast<std::size_t>(rings + 1), std::vector<int>(static_cast<std::size_t>(n)));
  auto down = up;
  for (int j = 0; j <= rings; ++j)
    for (int i = 0; i < n; ++i) {
      up[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = next_id++;
      down[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = next_id++;
    }
  for (int& v : bottom) v = next_id++;

  auto U = [&](int j, int i) { return up[static_cast<std::size_t>(j)][static_cast<std::size_t>((i % n + n) % n)]; };
  auto D = [&](int j, int i) { return down[static_cast<std::size_t>(j)][static_cast<std::size_t>((i % n + n) % n)]; };
  auto T = [&](int i) { return top[static_cast<std::size_t>((i % n + n) % n)]; };
  auto B = [&](int i) { return bottom[static_cast<std::size_t>((i % n + n) % n)]; };

  std::vector<Cycle> facets;
  facets.push_back(top);
  for (int i = 0; i < n; ++i) facets.push_back({T(i), T(i + 1), U(0, i + 1), D(0, i), U(0, i)});
  for (int j = 0; j < rings; ++j)
    for (int i = 0; i < n; ++i)
      facets.push_back({D(j, i), U(j, i + 1), D(j, i + 1), U(j + 1, i + 1), D(j + 1, i), U(j + 1, i)});
  for (int i = 0; i < n; ++i) facets.push_back({D(rings, i - 1), U(rings, i), D(rings, i), B(i), B(i - 1)});
  facets.push_back(bottom);
  return Polytope(orient_consistently(std::move(facets)));
}

Polytope barrel() { return tube(6, 0); }

Polytope d_k(int k) {
  if (k < 0) throw std::invalid_argument("d_k: k must be non-negative");
  return tube(5, k);
}

}  // namespace belted::build
