#pragma once

// Combinatorial simple 3-polytopes stored as oriented facet cycles.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace belted {

/// Boundary walk of a facet: vertex ids, counterclockwise.
using Cycle = std::vector<int>;

enum class PolytopeErrorKind {
  Malformed,
  Degenerate,
  NonSimpleVertex,
  EdgeIncidence,
  RotationSystem,
  Euler,
  Disconnected,
  MultiEdge,
  NotThreeConnected,
};

class PolytopeError : public std::runtime_error {
 public:
  PolytopeError(PolytopeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  PolytopeErrorKind kind() const { return kind_; }

 private:
  PolytopeErrorKind kind_;
};

/// A closed-form identity that must hold on every valid input failed.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FVector {
  long f0 = 0;
  long f1 = 0;
  long f2 = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Number of k-gonal facets for each k.
struct PVector {
  std::map<int, long> counts;

  long operator[](int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  long facet_count() const;
  long side_count() const;  // sum of k * p_k, equals 2 f1
  /// 3 p3 + 2 p4 + p5 = 12 + sum_{k >= 7} (k - 6) p_k
  bool satisfies_hexagon_balance() const;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* first_failure() const;
  const ValidationCheck* find(std::string_view name) const;
};

/// Runs every structural check on raw facet cycles. Never throws.
ValidationReport validate(std::span<const Cycle> facets);

class Polytope {
 public:
  /// Validates the facet cycles; throws PolytopeError on the first failing check.
  explicit Polytope(std::vector<Cycle> facets);

  int facet_count() const { return static_cast<int>(facets_.size()); }
  int vertex_count() const { return static_cast<int>(neighbors_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  FVector f_vector() const { return {vertex_count(), edge_count(), facet_count()}; }
  PVector p_vector() const;

  const std::vector<Cycle>& facets() const { return facets_; }
  const Cycle& facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }
  int gonality(int i) const { return static_cast<int>(facet(i).size()); }

  /// Neighbours of v in rotation order: a face traverses ..., n[k], v, n[k+1], ...
  const std::array<int, 3>& neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  /// vertex_facets(v)[k] is the facet traversing the dart v -> neighbors(v)[k].
  const std::array<int, 3>& vertex_facets(int v) const { return vertex_facets_[static_cast<std::size_t>(v)]; }
  /// Successor of u in the rotation at v.
  int rotate(int v, int u) const;
  int rotate_back(int v, int u) const;

  /// Facets across the edges of facet i; entry p is across (facet(i)[p], facet(i)[p+1]).
  const std::vector<int>& facet_neighbors(int i) const { return facet_neighbors_[static_cast<std::size_t>(i)]; }
  bool adjacent(int i, int j) const { return shared_edge_id(i, j) >= 0; }
  /// Endpoints of F_i ∩ F_j, if the facets share an edge.
  std::optional<std::pair<int, int>> shared_edge(int i, int j) const;
  /// The vertex F_i ∩ F_j ∩ F_k, if any.
  std::optional<int> common_vertex(int i, int j, int k) const;
  /// Facet traversing the dart u -> v.
  int dart_facet(int u, int v) const;

  /// Undirected edges (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Orientation reversal of every facet cycle.
  Polytope mirror() const;

 private:
  int shared_edge_id(int i, int j) const {
    return shared_edge_[static_cast<std::size_t>(i) * facets_.size() + static_cast<std::size_t>(j)];
  }

  std::vector<Cycle> facets_;
  std::vector<std::array<int, 3>> neighbors_;
  std::vector<std::array<int, 3>> vertex_facets_;
  std::vector<std::vector<int>> facet_neighbors_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> shared_edge_;  // m x m, edge id or -1
};

/// Reorients facet cycles so that every edge is traversed once in each
/// direction; the first facet keeps its given orientation. Throws
/// PolytopeError if the surface is not orientable or not edge-manifold.
std::vector<Cycle> orient_consistently(std::vector<Cycle> facets);

}  // namespace belted
