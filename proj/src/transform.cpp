#include "belted/transform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "belted/belts.hpp"
#include "belted/canonical.hpp"

namespace belted {

namespace {

int wrap(int x, int k) { return ((x % k) + k) % k; }

}  // namespace

TruncationSpec spec_from_dart(const Polytope& p, int facet, int u, int v, int s) {
  const Cycle& c = p.facet(facet);
  const int k = static_cast<int>(c.size());
  for (int t = 0; t < k; ++t)
    if (c[static_cast<std::size_t>(t)] == u && c[static_cast<std::size_t>(wrap(t + 1, k))] == v) return {facet, t, s};
  throw std::invalid_argument("spec_from_dart: dart not on facet");
}

TruncationSignature signature(const Polytope& p, const TruncationSpec& spec) {
  if (spec.facet < 0 || spec.facet >= p.facet_count()) throw std::invalid_argument("truncation: no such facet");
  const int k = p.gonality(spec.facet);
  if (spec.s < 0 || spec.s > k - 2) throw std::invalid_argument("truncation: need 0 <= s <= k - 2");
  if (spec.start < 0 || spec.start >= k) throw std::invalid_argument("truncation: start outside the facet");
  const auto& across = p.facet_neighbors(spec.facet);
  int h1 = across[static_cast<std::size_t>(wrap(spec.start - 1, k))];
  int h2 = across[static_cast<std::size_t>(wrap(spec.start + spec.s, k))];
  return {spec.s, k, p.gonality(h1), p.gonality(h2)};
}

Polytope sk_truncate(const Polytope& p, const TruncationSpec& spec) {
  signature(p, spec);
  const Cycle& c = p.facet(spec.facet);
  const int k = static_cast<int>(c.size());
  auto at = [&](int t) { return c[static_cast<std::size_t>(wrap(t, k))]; };
  const int a = p.vertex_count(), b = a + 1;
  const int p0 = spec.start, s = spec.s;

  Cycle f1{a}, f2{b};
  for (int t = 0; t <= s; ++t) f1.push_back(at(p0 + t));
  f1.push_back(b);
  for (int t = s + 1; t <= k - 1; ++t) f2.push_back(at(p0 + t));
  f2.push_back(a);

  // Flanking facets traverse E1 as c[p-1] <- c[p] and E2 as c[p+s] <- c[p+s+1].
  auto insert_between = [](Cycle& f, int from, int to, int x) {
    const std::size_t n = f.size();
    for (std::size_t t = 0; t < n; ++t)
      if (f[t] == from && f[(t + 1) % n] == to) {
        f.insert(f.begin() + static_cast<long>(t) + 1, x);
        return;
      }
    throw std::logic_error("truncation: flanking edge not found");
  };
  std::vector<Cycle> facets = p.facets();
  const auto& across = p.facet_neighbors(spec.facet);
  int h1 = across[static_cast<std::size_t>(wrap(p0 - 1, k))];
  int h2 = across[static_cast<std::size_t>(wrap(p0 + s, k))];
  insert_between(facets[static_cast<std::size_t>(h1)], at(p0), at(p0 - 1), a);
  insert_between(facets[static_cast<std::size_t>(h2)], at(p0 + s + 1), at(p0 + s), b);
  facets[static_cast<std::size_t>(spec.facet)] = std::move(f1);
  facets.push_back(std::move(f2));
  return Polytope(std::move(facets));
}

std::vector<TruncationSpec> all_truncation_specs(const Polytope& p) {
  std::vector<TruncationSpec> out;
  for (int i = 0; i < p.facet_count(); ++i) {
    const int k = p.gonality(i);
    for (int start = 0; start < k; ++start)
      for (int s = 0; s <= k - 2; ++s) out.push_back({i, start, s});
  }
  return out;
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::Simplex: return "simplex";
    case Obstruction::NotAdjacent: return "not_adjacent";
    case Obstruction::TriangularFlank: return "triangular_flank";
    case Obstruction::ThreeBelt: return "three_belt";
  }
  return "none";
}

StraightenResult straighten(const Polytope& p, int i, int j) {
  StraightenResult out;
  const int m = p.facet_count();
  if (m == 4) {
    out.obstruction = Obstruction::Simplex;
    return out;
  }
  if (i < 0 || j < 0 || i >= m || j >= m || i == j || !p.adjacent(i, j)) {
    out.obstruction = Obstruction::NotAdjacent;
    return out;
  }
  if (i > j) std::swap(i, j);
  // Orient the edge so that F_i traverses a -> b.
  auto [a, b] = *p.shared_edge(i, j);
  if (p.dart_facet(a, b) != i) std::swap(a, b);
  auto third = [&](int v) {
    for (int f : p.vertex_facets(v))
      if (f != i && f != j) return f;
    return -1;
  };
  const int fk = third(a), fl = third(b);
  for (int t : p.facet_neighbors(i))
    if (t != j && t != fk && t != fl && p.adjacent(t, j)) {
      out.obstruction = Obstruction::ThreeBelt;
      return out;
    }
  if (p.gonality(fk) == 3 || p.gonality(fl) == 3) {
    out.obstruction = Obstruction::TriangularFlank;
    return out;
  }
  for (const Belt& belt : k_belts(p, 4)) {
    const auto& f = belt.facets;
    if (std::find(f.begin(), f.end(), i) != f.end() && std::find(f.begin(), f.end(), j) != f.end()) {
      out.loses_flagness = true;
      break;
    }
  }

  // F_i = [a, b, p1..pr], F_j = [b, a, q1..qs]; merged = [p1..pr, q1..qs].
  auto from = [](const Cycle& c, int x, int y) {
    const std::size_t n = c.size();
    for (std::size_t t = 0; t < n; ++t)
      if (c[t] == x && c[(t + 1) % n] == y) {
        Cycle r;
        for (std::size_t u = 2; u < n; ++u) r.push_back(c[(t + u) % n]);
        return r;
      }
    throw std::logic_error("straighten: dart not found");
  };
  Cycle merged = from(p.facet(i), a, b);
  Cycle rest = from(p.facet(j), b, a);
  merged.insert(merged.end(), rest.begin(), rest.end());

  std::vector<Cycle> facets;
  for (int f = 0; f < m; ++f) {
    if (f == j) continue;
    Cycle c = f == i ? merged : p.facet(f);
    c.erase(std::remove_if(c.begin(), c.end(), [&](int v) { return v == a || v == b; }), c.end());
    for (int& v : c) v -= (v > a) + (v > b);
    facets.push_back(std::move(c));
  }
  out.polytope.emplace(std::move(facets));
  return out;
}

Polytope chamfer(const Polytope& p) {
  const int n = p.vertex_count();
  std::map<std::pair<int, int>, int> corner;  // (v, F) -> id
  int next = n;
  std::vector<Cycle> facets;
  for (int f = 0; f < p.facet_count(); ++f) {
    Cycle c;
    for (int v : p.facet(f)) {
      corner[{v, f}] = next;
      c.push_back(next++);
    }
    facets.push_back(std::move(c));
  }
  for (auto [u, v] : p.edges()) {
    int f = p.dart_facet(u, v), g = p.dart_facet(v, u);
    facets.push_back({corner[{v, f}], corner[{u, f}], u, corner[{u, g}], corner[{v, g}], v});
  }
  return Polytope(orient_consistently(std::move(facets)));
}

Polytope leapfrog(const Polytope& p) {
  // Vertex (F, t) sits on edge t of facet F, i.e. (F[t], F[t+1]).
  std::vector<int> offset(static_cast<std::size_t>(p.facet_count()) + 1, 0);
  for (int f = 0; f < p.facet_count(); ++f) offset[static_cast<std::size_t>(f) + 1] = offset[static_cast<std::size_t>(f)] + p.gonality(f);
  auto id = [&](int f, int x, int y) {
    const Cycle& c = p.facet(f);
    const std::size_t k = c.size();
    for (std::size_t t = 0; t < k; ++t) {
      int u = c[t], v = c[(t + 1) % k];
      if ((u == x && v == y) || (u == y && v == x)) return offset[static_cast<std::size_t>(f)] + static_cast<int>(t);
    }
    throw std::logic_error("leapfrog: edge not on facet");
  };
  std::vector<Cycle> facets;
  for (int f = 0; f < p.facet_count(); ++f) {
    Cycle c;
    for (int t = 0; t < p.gonality(f); ++t) c.push_back(offset[static_cast<std::size_t>(f)] + t);
    facets.push_back(std::move(c));
  }
  for (int v = 0; v < p.vertex_count(); ++v) {
    const auto& fs = p.vertex_facets(v);
    Cycle hex;
    for (int t = 0; t < 3; ++t) {
      int f = fs[static_cast<std::size_t>(t)], g = fs[static_cast<std::size_t>((t + 1) % 3)];
      auto [x, y] = *p.shared_edge(f, g);
      hex.push_back(id(f, x, y));
      hex.push_back(id(g, x, y));
    }
    facets.push_back(std::move(hex));
  }
  return Polytope(orient_consistently(std::move(facets)));
}

bool op_commute_check(const Polytope& p) {
  return canonical_code(chamfer(leapfrog(p)), true) == canonical_code(leapfrog(chamfer(p)), true);
}

}  // namespace belted
