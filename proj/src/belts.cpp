#include "belted/belts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "belted/builders.hpp"
#include "belted/canonical.hpp"

namespace belted {

Belt canonical_belt(std::vector<int> cyclic) {
  const std::size_t k = cyclic.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<int> cand(k);
      for (std::size_t t = 0; t < k; ++t) cand[t] = cyclic[(r + t) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(cyclic.begin(), cyclic.end());
  }
  return Belt{std::move(best)};
}

std::vector<Belt> k_belts(const Polytope& p, int k) {
  if (k < 3) throw std::invalid_argument("k_belts: k must be at least 3");
  const int m = p.facet_count();
  std::vector<Belt> out;
  if (k > m) return out;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(k));

  // path[0] is the least facet; each extension is adjacent to the previous
  // facet and disjoint from every earlier non-consecutive one. In a simple
  // 3-polytope two facets meet iff they share an edge.
  auto extend = [&](auto&& self) -> void {
    const int depth = static_cast<int>(path.size());
    const int last = path.back();
    for (int next : p.facet_neighbors(last)) {
      if (next <= path[0]) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      bool closing = depth == k - 1;
      if (depth > 1 && closing != p.adjacent(next, path[0])) continue;
      bool ok = true;
      for (int t = 1; t + 1 < depth && ok; ++t) ok = !p.adjacent(next, path[static_cast<std::size_t>(t)]);
      if (!ok) continue;
      path.push_back(next);
      if (closing) {
        bool fresh = path[1] < path.back();
        if (k == 3 && p.common_vertex(path[0], path[1], path[2])) fresh = false;
        if (fresh) out.push_back(Belt{path});
      } else {
        self(self);
      }
      path.pop_back();
    }
  };
  for (int s = 0; s < m; ++s) {
    path.assign(1, s);
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_flag(const Polytope& p) { return p.facet_count() > 4 && k_belts(p, 3).empty(); }

bool facet_surrounded_by_belt(const Polytope& p, int i) {
  const auto& ring = p.facet_neighbors(i);
  const std::size_t k = ring.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 2; b < k; ++b) {
      if (a == 0 && b == k - 1) continue;
      if (p.adjacent(ring[a], ring[b])) return false;
    }
  if (k == 3 && p.common_vertex(ring[0], ring[1], ring[2])) return false;
  return true;
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Fullerene: return "Fullerene";
    case ClassKind::SingularQuad: return "SingularQuad";
    case ClassKind::SingularHept: return "SingularHept";
    case ClassKind::NonMember: return "NonMember";
  }
  return "NonMember";
}

Classification classify(const Polytope& p) {
  Classification out;
  const int m = p.facet_count();
  std::vector<int> odd;
  for (int i = 0; i < m; ++i)
    if (p.gonality(i) != 5 && p.gonality(i) != 6) odd.push_back(i);
  if (odd.empty()) {
    out.kind = ClassKind::Fullerene;
    return out;
  }
  if (odd.size() != 1) return out;
  const int f = odd[0];
  if (p.gonality(f) == 4) {
    out.kind = ClassKind::SingularQuad;
    out.detail = {f};
    return out;
  }
  if (p.gonality(f) != 7) return out;

  auto pent = [&](int i) { return p.gonality(i) == 5; };
  const auto& ring = p.facet_neighbors(f);
  if (std::none_of(ring.begin(), ring.end(), pent)) return out;

  // F5567: adjacent pentagons whose common edge ends on the heptagon and on a hexagon.
  std::optional<std::pair<int, int>> fragment;
  bool every_pair_split = true;
  bool any_pair = false;
  for (int a = 0; a < m; ++a) {
    if (!pent(a)) continue;
    for (int b : p.facet_neighbors(a)) {
      if (b <= a || !pent(b)) continue;
      any_pair = true;
      if (p.adjacent(a, f) == p.adjacent(b, f)) every_pair_split = false;
      auto [u, v] = *p.shared_edge(a, b);
      auto third = [&](int x) {
        for (int g : p.vertex_facets(x))
          if (g != a && g != b) return g;
        return -1;
      };
      int tu = third(u), tv = third(v);
      if (!fragment && ((tu == f && p.gonality(tv) == 6) || (tv == f && p.gonality(tu) == 6))) fragment = {a, b};
    }
  }
  if (!fragment && !every_pair_split) return out;
  out.kind = ClassKind::SingularHept;
  out.detail = {f};
  if (fragment) {
    out.detail.push_back(fragment->first);
    out.detail.push_back(fragment->second);
  } else {
    out.vacuous_pentagon_clause = !any_pair;
  }
  return out;
}

FiveBeltStructure five_belt_structure(const Polytope& p) {
  if (classify(p).kind != ClassKind::Fullerene) throw std::invalid_argument("five_belt_structure: not a fullerene");
  FiveBeltStructure out;
  out.count = static_cast<int>(k_belts(p, 5).size());
  if (out.count < 12) throw IdentityViolation("fullerene with fewer than 12 five-belts");
  if (out.count > 12) {
    int k = out.count - 12;
    if (p.p_vector()[6] != 5 * k || canonical_code(p, true) != canonical_code(build::d_k(k), true))
      throw IdentityViolation("fullerene with " + std::to_string(out.count) + " five-belts is not D_" + std::to_string(k));
    out.dk_index = k;
  }
  return out;
}

std::vector<std::vector<int>> zigzag_cycles(const Polytope& p) {
  // A zigzag turns alternately left and right, so no three consecutive
  // edges lie on one facet.
  std::set<std::vector<int>> cycles;
  auto least_form = [](const std::vector<int>& walk) {
    std::vector<int> best, w = walk;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < w.size(); ++r) {
        std::vector<int> cand(w.begin() + static_cast<long>(r), w.end());
        cand.insert(cand.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (best.empty() || cand < best) best = std::move(cand);
      }
      std::reverse(w.begin(), w.end());
    }
    return best;
  };
  for (int u = 0; u < p.vertex_count(); ++u)
    for (int v : p.neighbors(u)) {
      std::vector<int> walk;
      int a = u, b = v;
      bool left = true;
      do {
        walk.push_back(a);
        int c = left ? p.rotate(b, a) : p.rotate_back(b, a);
        a = b;
        b = c;
        left = !left;
      } while (!(a == u && b == v && left));
      cycles.insert(least_form(walk));
    }
  return {cycles.begin(), cycles.end()};
}

bool has_4belt_not_surrounding_quad(const Polytope& p) {
  std::set<std::vector<int>> rings;
  for (int i = 0; i < p.facet_count(); ++i)
    if (p.gonality(i) == 4) {
      auto r = p.facet_neighbors(i);
      std::sort(r.begin(), r.end());
      rings.insert(r);
    }
  for (const Belt& b : k_belts(p, 4)) {
    auto s = b.facets;
    std::sort(s.begin(), s.end());
    if (!rings.count(s)) return true;
  }
  return false;
}

}  // namespace belted
