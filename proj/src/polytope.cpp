#include "belted/polytope.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace belted {

namespace {

std::uint64_t dart_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

std::string fmt_edge(int u, int v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

long PVector::facet_count() const {
  long s = 0;
  for (auto [k, n] : counts) s += n;
  return s;
}

long PVector::side_count() const {
  long s = 0;
  for (auto [k, n] : counts) s += static_cast<long>(k) * n;
  return s;
}

bool PVector::satisfies_hexagon_balance() const {
  long rhs = 12;
  for (auto [k, n] : counts)
    if (k >= 7) rhs += (k - 6) * n;
  return 3 * (*this)[3] + 2 * (*this)[4] + (*this)[5] == rhs;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(std::span<const Cycle> facets) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const int m = static_cast<int>(facets.size());

  // Structure: cycles of length >= 3 over dense non-negative ids, no repeated vertex.
  int max_id = -1;
  std::string structure_error;
  for (int i = 0; i < m && structure_error.empty(); ++i) {
    const Cycle& c = facets[static_cast<std::size_t>(i)];
    if (c.size() < 3) structure_error = "facet " + std::to_string(i) + " has fewer than 3 vertices";
    Cycle sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (structure_error.empty() && std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      structure_error = "facet " + std::to_string(i) + " is not a simple cycle";
    for (int v : c) {
      if (v < 0 && structure_error.empty()) structure_error = "negative vertex id";
      max_id = std::max(max_id, v);
    }
  }
  const int n = max_id + 1;
  std::vector<int> incidence(static_cast<std::size_t>(std::max(n, 0)), 0);
  if (structure_error.empty())
    for (const Cycle& c : facets)
      for (int v : c) ++incidence[static_cast<std::size_t>(v)];
  if (structure_error.empty())
    for (int v = 0; v < n; ++v)
      if (incidence[static_cast<std::size_t>(v)] == 0) {
        structure_error = "vertex ids are not dense: " + std::to_string(v) + " unused";
        break;
      }
  add("structure", structure_error.empty(), structure_error);
  add("facet_count", m >= 4, m >= 4 ? "" : "fewer than 4 facets");
  if (!structure_error.empty()) return report;

  // Simplicity: each vertex lies in exactly three facets.
  {
    std::string detail;
    for (int v = 0; v < n; ++v)
      if (incidence[static_cast<std::size_t>(v)] != 3) {
        detail = "vertex " + std::to_string(v) + " lies in " + std::to_string(incidence[static_cast<std::size_t>(v)]) +
                 " facets (nonsimple vertex)";
        break;
      }
    add("simple_vertices", detail.empty(), detail);
  }

  // Darts: each directed edge used once; each undirected edge by exactly two facets.
  std::unordered_map<std::uint64_t, int> dart_owner;
  std::map<std::pair<int, int>, int> edge_uses;
  bool dart_unique = true;
  std::string dart_detail;
  for (int i = 0; i < m; ++i) {
    const Cycle& c = facets[static_cast<std::size_t>(i)];
    for (std::size_t p = 0; p < c.size(); ++p) {
      int u = c[p], v = c[(p + 1) % c.size()];
      if (!dart_owner.emplace(dart_key(u, v), i).second && dart_unique) {
        dart_unique = false;
        dart_detail = "dart " + fmt_edge(u, v) + " traversed by two facets";
      }
      ++edge_uses[{std::min(u, v), std::max(u, v)}];
    }
  }
  {
    std::string detail;
    for (auto [e, uses] : edge_uses)
      if (uses != 2) {
        detail = "edge " + fmt_edge(e.first, e.second) + " lies in " + std::to_string(uses) + " facets";
        break;
      }
    add("edge_incidence", detail.empty(), detail);
  }

  // Rotation system: the rotation derived at each vertex must be a single
  // cycle, and tracing faces from it must reproduce the given facets.
  {
    std::string detail = dart_detail;
    bool ok = dart_unique && report.find("simple_vertices")->passed && report.find("edge_incidence")->passed;
    if (ok) {
      // succ[(u,v)] = w when some facet reads u, v, w.
      std::unordered_map<std::uint64_t, int> succ;
      for (const Cycle& c : facets)
        for (std::size_t p = 0; p < c.size(); ++p)
          succ[dart_key(c[p], c[(p + 1) % c.size()])] = c[(p + 2) % c.size()];
      std::vector<std::vector<std::pair<int, int>>> rot(static_cast<std::size_t>(n));
      for (const Cycle& c : facets)
        for (std::size_t p = 0; p < c.size(); ++p) {
          int u = c[p], v = c[(p + 1) % c.size()], w = c[(p + 2) % c.size()];
          rot[static_cast<std::size_t>(v)].emplace_back(u, w);
        }
      for (int v = 0; v < n && ok; ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        auto next = [&](int u) {
          for (auto [a, b] : r)
            if (a == u) return b;
          return -1;
        };
        int start = r.front().first, cur = start, steps = 0;
        do {
          cur = next(cur);
          ++steps;
        } while (cur >= 0 && cur != start && steps <= 3);
        if (cur != start || steps != 3) {
          ok = false;
          detail = "rotation at vertex " + std::to_string(v) + " is not a single cycle";
        }
      }
      // Trace every face from the derived rotation and compare.
      if (ok) {
        std::size_t traced = 0;
        for (const Cycle& c : facets) {
          int u = c[0], v = c[1];
          std::size_t len = 0;
          do {
            int w = succ.at(dart_key(u, v));
            u = v;
            v = w;
            ++len;
          } while ((u != c[0] || v != c[1]) && len <= c.size());
          if (len != c.size()) {
            ok = false;
            detail = "face tracing does not reproduce facet cycles";
            break;
          }
          traced += len;
        }
        if (ok && traced != dart_owner.size()) {
          ok = false;
          detail = "face tracing does not cover every dart";
        }
      }
    } else if (detail.empty()) {
      detail = "no consistent rotation system";
    }
    add("rotation_system", ok, detail);
  }

  const long f0 = n, f1 = static_cast<long>(edge_uses.size()), f2 = m;
  add("euler", f0 - f1 + f2 == 2,
      "f0 - f1 + f2 = " + std::to_string(f0 - f1 + f2) + (f0 - f1 + f2 == 2 ? "" : " (Euler violation)"));

  // Connectivity of the vertex-edge graph.
  {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [e, uses] : edge_uses) {
      adj[static_cast<std::size_t>(e.first)].push_back(e.second);
      adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          queue.push_back(w);
        }
    }
    add("connected", reached == n, reached == n ? "" : "vertex-edge graph is disconnected");
  }

  // Facet intersections: empty, a vertex, or an edge (which also rules out
  // a pair of facets sharing two edges).
  {
    std::vector<std::vector<int>> vertex_facets(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
      for (int v : facets[static_cast<std::size_t>(i)]) vertex_facets[static_cast<std::size_t>(v)].push_back(i);
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (int v = 0; v < n; ++v) {
      const auto& fs = vertex_facets[static_cast<std::size_t>(v)];
      for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b)
          shared[{std::min(fs[a], fs[b]), std::max(fs[a], fs[b])}].push_back(v);
    }
    auto consecutive = [&](int facet, int u, int v) {
      const Cycle& c = facets[static_cast<std::size_t>(facet)];
      for (std::size_t p = 0; p < c.size(); ++p) {
        int a = c[p], b = c[(p + 1) % c.size()];
        if ((a == u && b == v) || (a == v && b == u)) return true;
      }
      return false;
    };
    std::string multi, three;
    for (const auto& [pair, verts] : shared) {
      if (verts.size() > 2 ||
          (verts.size() == 2 && !(consecutive(pair.first, verts[0], verts[1]) &&
                                  consecutive(pair.second, verts[0], verts[1])))) {
        // Count shared edges to distinguish multi-edges from other bad intersections.
        int shared_edges = 0;
        const Cycle& c = facets[static_cast<std::size_t>(pair.first)];
        for (std::size_t p = 0; p < c.size(); ++p)
          if (consecutive(pair.second, c[p], c[(p + 1) % c.size()])) ++shared_edges;
        std::string d = "facets " + std::to_string(pair.first) + " and " + std::to_string(pair.second);
        if (shared_edges > 1 && multi.empty()) multi = d + " share " + std::to_string(shared_edges) + " edges";
        if (three.empty()) three = d + " intersect in more than one edge or vertex";
      }
    }
    add("single_shared_edge", multi.empty(), multi);
    if (three.empty() && f1 < 6) three = "fewer than 6 edges";
    add("three_connected", three.empty(), three);
  }

  {
    bool ok = f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4;
    add("steinitz_inequalities", ok,
        ok ? "" : "f-vector (" + std::to_string(f0) + "," + std::to_string(f1) + "," + std::to_string(f2) + ") violates f2 <= 2f0-4, f0 <= 2f2-4");
  }
  return report;
}

namespace {

PolytopeErrorKind kind_of(std::string_view check) {
  if (check == "structure") return PolytopeErrorKind::Malformed;
  if (check == "facet_count") return PolytopeErrorKind::Degenerate;
  if (check == "simple_vertices") return PolytopeErrorKind::NonSimpleVertex;
  if (check == "edge_incidence") return PolytopeErrorKind::EdgeIncidence;
  if (check == "rotation_system") return PolytopeErrorKind::RotationSystem;
  if (check == "euler") return PolytopeErrorKind::Euler;
  if (check == "connected") return PolytopeErrorKind::Disconnected;
  if (check == "single_shared_edge") return PolytopeErrorKind::MultiEdge;
  return PolytopeErrorKind::NotThreeConnected;
}

}  // namespace

Polytope::Polytope(std::vector<Cycle> facets) : facets_(std::move(facets)) {
  ValidationReport report = validate(facets_);
  if (const ValidationCheck* bad = report.first_failure())
    throw PolytopeError(kind_of(bad->name), bad->name + ": " + bad->detail);

  const int m = facet_count();
  int n = 0;
  for (const Cycle& c : facets_)
    for (int v : c) n = std::max(n, v + 1);

  std::unordered_map<std::uint64_t, int> owner;
  std::unordered_map<std::uint64_t, int> succ;
  for (int i = 0; i < m; ++i) {
    const Cycle& c = facets_[static_cast<std::size_t>(i)];
    for (std::size_t p = 0; p < c.size(); ++p) {
      owner[dart_key(c[p], c[(p + 1) % c.size()])] = i;
      succ[dart_key(c[p], c[(p + 1) % c.size()])] = c[(p + 2) % c.size()];
    }
  }

  // Rotation at v: the face reading u, v, w makes w follow u.
  neighbors_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
  vertex_facets_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
  std::vector<std::vector<std::pair<int, int>>> rot(static_cast<std::size_t>(n));
  for (const Cycle& c : facets_)
    for (std::size_t p = 0; p < c.size(); ++p)
      rot[static_cast<std::size_t>(c[(p + 1) % c.size()])].emplace_back(c[p], c[(p + 2) % c.size()]);
  for (int v = 0; v < n; ++v) {
    auto& r = rot[static_cast<std::size_t>(v)];
    int first = std::min({r[0].first, r[1].first, r[2].first});
    auto next = [&](int u) {
      for (auto [a, b] : r)
        if (a == u) return b;
      return -1;
    };
    auto& nb = neighbors_[static_cast<std::size_t>(v)];
    nb[0] = first;
    nb[1] = next(nb[0]);
    nb[2] = next(nb[1]);
    for (int k = 0; k < 3; ++k) vertex_facets_[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = owner.at(dart_key(v, nb[static_cast<std::size_t>(k)]));
  }

  for (int v = 0; v < n; ++v)
    for (int w : neighbors_[static_cast<std::size_t>(v)])
      if (v < w) edges_.emplace_back(v, w);
  std::sort(edges_.begin(), edges_.end());

  shared_edge_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    int a = owner.at(dart_key(u, v)), b = owner.at(dart_key(v, u));
    shared_edge_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] = static_cast<int>(e);
    shared_edge_[static_cast<std::size_t>(b) * static_cast<std::size_t>(m) + static_cast<std::size_t>(a)] = static_cast<int>(e);
  }

  facet_neighbors_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Cycle& c = facets_[static_cast<std::size_t>(i)];
    auto& fn = facet_neighbors_[static_cast<std::size_t>(i)];
    fn.reserve(c.size());
    for (std::size_t p = 0; p < c.size(); ++p) fn.push_back(owner.at(dart_key(c[(p + 1) % c.size()], c[p])));
  }
}

PVector Polytope::p_vector() const {
  PVector p;
  for (const Cycle& c : facets_) ++p.counts[static_cast<int>(c.size())];
  return p;
}

int Polytope::rotate(int v, int u) const {
  const auto& nb = neighbors(v);
  for (int k = 0; k < 3; ++k)
    if (nb[static_cast<std::size_t>(k)] == u) return nb[static_cast<std::size_t>((k + 1) % 3)];
  throw std::out_of_range("rotate: not a neighbour");
}

int Polytope::rotate_back(int v, int u) const {
  const auto& nb = neighbors(v);
  for (int k = 0; k < 3; ++k)
    if (nb[static_cast<std::size_t>(k)] == u) return nb[static_cast<std::size_t>((k + 2) % 3)];
  throw std::out_of_range("rotate_back: not a neighbour");
}

std::optional<std::pair<int, int>> Polytope::shared_edge(int i, int j) const {
  int e = shared_edge_id(i, j);
  if (e < 0) return std::nullopt;
  return edges_[static_cast<std::size_t>(e)];
}

std::optional<int> Polytope::common_vertex(int i, int j, int k) const {
  for (int v : facet(i)) {
    const auto& fs = vertex_facets(v);
    if (std::find(fs.begin(), fs.end(), j) != fs.end() && std::find(fs.begin(), fs.end(), k) != fs.end()) return v;
  }
  return std::nullopt;
}

int Polytope::dart_facet(int u, int v) const {
  const auto& nb = neighbors(u);
  for (int k = 0; k < 3; ++k)
    if (nb[static_cast<std::size_t>(k)] == v) return vertex_facets(u)[static_cast<std::size_t>(k)];
  throw std::out_of_range("dart_facet: not an edge");
}

Polytope Polytope::mirror() const {
  std::vector<Cycle> rev = facets_;
  for (Cycle& c : rev) std::reverse(c.begin(), c.end());
  return Polytope(std::move(rev));
}

std::vector<Cycle> orient_consistently(std::vector<Cycle> facets) {
  const std::size_t m = facets.size();
  // Undirected edge -> facets containing it.
  std::map<std::pair<int, int>, std::vector<std::size_t>> edge_facets;
  for (std::size_t i = 0; i < m; ++i) {
    const Cycle& c = facets[i];
    for (std::size_t p = 0; p < c.size(); ++p) {
      int u = c[p], v = c[(p + 1) % c.size()];
      edge_facets[{std::min(u, v), std::max(u, v)}].push_back(i);
    }
  }
  for (const auto& [e, fs] : edge_facets)
    if (fs.size() != 2)
      throw PolytopeError(PolytopeErrorKind::EdgeIncidence,
                          "edge_incidence: edge " + fmt_edge(e.first, e.second) + " lies in " + std::to_string(fs.size()) + " facets");

  auto has_dart = [&](std::size_t f, int u, int v) {
    const Cycle& c = facets[f];
    for (std::size_t p = 0; p < c.size(); ++p)
      if (c[p] == u && c[(p + 1) % c.size()] == v) return true;
    return false;
  };

  std::vector<char> done(m, 0);
  for (std::size_t root = 0; root < m; ++root) {
    if (done[root]) continue;
    done[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      const Cycle c = facets[f];
      for (std::size_t p = 0; p < c.size(); ++p) {
        int u = c[p], v = c[(p + 1) % c.size()];
        const auto& fs = edge_facets[{std::min(u, v), std::max(u, v)}];
        std::size_t g = fs[0] == f ? fs[1] : fs[0];
        if (g == f) continue;
        if (!done[g]) {
          if (has_dart(g, u, v)) std::reverse(facets[g].begin(), facets[g].end());
          done[g] = 1;
          queue.push_back(g);
        } else if (has_dart(g, u, v)) {
          throw PolytopeError(PolytopeErrorKind::RotationSystem, "rotation_system: surface is not orientable");
        }
      }
    }
  }
  return facets;
}

}  // namespace belted
