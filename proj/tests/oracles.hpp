#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code with the library algorithms.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "belted/polytope.hpp"

namespace oracle {

using belted::Cycle;
using belted::Polytope;

inline Polytope relabel(const Polytope& p, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(p.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Cycle> facets = p.facets();
  std::shuffle(facets.begin(), facets.end(), rng);
  for (auto& f : facets) {
    for (int& v : f) v = perm[static_cast<std::size_t>(v)];
    std::rotate(f.begin(), f.begin() + static_cast<long>(rng() % f.size()), f.end());
  }
  return Polytope(facets);
}

inline std::vector<std::set<int>> adjacency(const Polytope& p) {
  std::vector<std::set<int>> adj(static_cast<std::size_t>(p.vertex_count()));
  for (const auto& f : p.facets())
    for (std::size_t k = 0; k < f.size(); ++k) {
      int a = f[k], b = f[(k + 1) % f.size()];
      adj[static_cast<std::size_t>(a)].insert(b);
      adj[static_cast<std::size_t>(b)].insert(a);
    }
  return adj;
}

// Plain backtracking graph isomorphism of the vertex-edge graphs. By Whitney's
// theorem this agrees with combinatorial equivalence up to reflection.
inline bool isomorphic(const Polytope& p, const Polytope& q) {
  if (p.vertex_count() != q.vertex_count() || p.facet_count() != q.facet_count()) return false;
  auto a = adjacency(p), b = adjacency(q);
  const int n = p.vertex_count();
  // BFS order on p so every vertex after the first has a mapped neighbour.
  std::vector<int> order{0};
  std::vector<bool> seen(static_cast<std::size_t>(n));
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int w : a[static_cast<std::size_t>(order[h])])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        order.push_back(w);
      }
  std::vector<int> map(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    int v = order[k];
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      bool fits = true;
      for (int w : a[static_cast<std::size_t>(v)]) {
        int mw = map[static_cast<std::size_t>(w)];
        if (mw >= 0 && !b[static_cast<std::size_t>(c)].count(mw)) fits = false;
      }
      if (!fits) continue;
      map[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      if (self(self, k + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(c)] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace oracle

namespace oracle {

// k-subsets of facets whose induced adjacency graph is one k-cycle (and, for
// k = 3, with no common vertex). Returned as sorted subsets.
inline std::set<std::vector<int>> brute_belts(const Polytope& p, int k) {
  const int m = p.facet_count();
  auto meets = [&](int a, int b) {
    std::set<int> fa(p.facet(a).begin(), p.facet(a).end());
    for (int v : p.facet(b))
      if (fa.count(v)) return true;
    return false;
  };
  std::set<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (a != b && meets(pick[static_cast<std::size_t>(a)], pick[static_cast<std::size_t>(b)]))
            adj[static_cast<std::size_t>(a)].push_back(b);
      for (const auto& row : adj)
        if (row.size() != 2) return;
      // Connected?
      std::vector<int> seen{0};
      for (std::size_t h = 0; h < seen.size(); ++h)
        for (int w : adj[static_cast<std::size_t>(seen[h])])
          if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
      if (static_cast<int>(seen.size()) != k) return;
      if (k == 3) {
        for (int v : p.facet(pick[0])) {
          auto in = [&](int f) {
            return std::find(p.facet(f).begin(), p.facet(f).end(), v) != p.facet(f).end();
          };
          if (in(pick[1]) && in(pick[2])) return;
        }
      }
      out.insert(pick);
      return;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Closed walks in which no three successive edges lie on one facet, found by
// testing facet cycles directly rather than through the rotation system.
inline std::set<std::vector<int>> brute_zigzags(const Polytope& p) {
  auto on_one_facet = [&](int a, int b, int c, int d) {
    for (const auto& f : p.facets()) {
      const std::size_t n = f.size();
      for (std::size_t s = 0; s < n; ++s) {
        bool fwd = f[s] == a && f[(s + 1) % n] == b && f[(s + 2) % n] == c && f[(s + 3) % n] == d;
        bool bwd = f[s] == d && f[(s + 1) % n] == c && f[(s + 2) % n] == b && f[(s + 3) % n] == a;
        if (fwd || bwd) return true;
      }
    }
    return false;
  };
  auto adj = adjacency(p);
  std::set<std::vector<int>> out;
  for (int u = 0; u < p.vertex_count(); ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == u) continue;
        std::vector<int> walk{u, v, w};
        for (;;) {
          std::size_t n = walk.size();
          int a = walk[n - 3], b = walk[n - 2], c = walk[n - 1];
          int next = -1;
          for (int d : adj[static_cast<std::size_t>(c)])
            if (d != b && !on_one_facet(a, b, c, d)) next = d;
          walk.push_back(next);
          n = walk.size();
          if (n > 4 && walk[n - 3] == u && walk[n - 2] == v && walk[n - 1] == w) break;
        }
        walk.resize(walk.size() - 3);
        std::size_t n = walk.size();
        std::vector<int> best;
        for (int dir = 0; dir < 2; ++dir) {
          for (std::size_t r = 0; r < n; ++r) {
            std::vector<int> cand;
            for (std::size_t t = 0; t < n; ++t) cand.push_back(walk[(r + t) % n]);
            if (best.empty() || cand < best) best = cand;
          }
          std::reverse(walk.begin(), walk.end());
        }
        out.insert(best);
      }
  return out;
}

}  // namespace oracle
