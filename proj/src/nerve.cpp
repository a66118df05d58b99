#include "belted/nerve.hpp"

#include <algorithm>
#include <stdexcept>

#include "belted/linalg.hpp"

namespace belted {

NerveComplex::NerveComplex(int vertex_count, const std::vector<Mask>& generators) : m_(vertex_count) {
  if (m_ < 0 || m_ > 64) throw std::invalid_argument("NerveComplex: at most 64 vertices");
  std::vector<Mask> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    Mask s = stack.back();
    stack.pop_back();
    if (s == 0 || !faces_.insert(s).second) continue;
    for (Mask rest = s; rest; rest &= rest - 1) stack.push_back(s & ~(rest & -rest));
  }
  int top = 0;
  for (Mask s : faces_) top = std::max(top, popcount(s));
  by_size_.assign(static_cast<std::size_t>(top) + 1, {});
  by_size_[0].push_back(0);
  for (Mask s : faces_) by_size_[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& v : by_size_) std::sort(v.begin(), v.end());
}

NerveComplex NerveComplex::of(const Polytope& p) {
  if (p.facet_count() > 64) throw std::invalid_argument("nerve: at most 64 facets");
  std::vector<Mask> triangles;
  for (int v = 0; v < p.vertex_count(); ++v) {
    Mask s = 0;
    for (int f : p.vertex_facets(v)) s |= Mask{1} << f;
    triangles.push_back(s);
  }
  NerveComplex k(p.facet_count(), triangles);
  auto f = k.f_vector();
  if (f.size() != 3 || f[0] != p.facet_count() || f[1] != p.edge_count() || f[2] != p.vertex_count())
    throw IdentityViolation("nerve is not dual to the polytope");
  return k;
}

NerveComplex NerveComplex::polygon(int k) {
  if (k < 3) throw std::invalid_argument("polygon: need at least 3 sides");
  std::vector<Mask> edges;
  for (int i = 0; i < k; ++i) edges.push_back((Mask{1} << i) | (Mask{1} << ((i + 1) % k)));
  return NerveComplex(k, edges);
}

const std::vector<Mask>& NerveComplex::simplices(int size) const {
  if (size < 0 || size >= static_cast<int>(by_size_.size())) return empty_;
  return by_size_[static_cast<std::size_t>(size)];
}

std::vector<long> NerveComplex::f_vector() const {
  std::vector<long> f;
  for (std::size_t s = 1; s < by_size_.size(); ++s) f.push_back(static_cast<long>(by_size_[s].size()));
  return f;
}

std::vector<Mask> NerveComplex::minimal_nonfaces() const {
  std::vector<Mask> out;
  for (int v = 0; v < m_; ++v)
    if (!contains(Mask{1} << v)) out.push_back(Mask{1} << v);
  for (std::size_t s = 1; s < by_size_.size(); ++s)
    for (Mask sigma : by_size_[s]) {
      int hi = 63 - __builtin_clzll(sigma);
      for (int v = hi + 1; v < m_; ++v) {
        Mask tau = sigma | (Mask{1} << v);
        if (contains(tau)) continue;
        bool minimal = true;
        for (Mask rest = tau; rest && minimal; rest &= rest - 1) minimal = contains(tau & ~(rest & -rest));
        if (minimal) out.push_back(tau);
      }
    }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

namespace {

// Simplices of K_ω grouped by size: cells[s] holds those with s vertices.
std::vector<std::vector<Mask>> restricted_cells(const NerveComplex& k, Mask omega) {
  std::vector<std::vector<Mask>> cells;
  for (int s = 0;; ++s) {
    const auto& all = k.simplices(s);
    if (all.empty()) break;
    std::vector<Mask> in;
    for (Mask sigma : all)
      if ((sigma & ~omega) == 0) in.push_back(sigma);
    if (in.empty()) break;
    cells.push_back(std::move(in));
  }
  return cells;
}

// Boundary ∂: C_{s-1 dim} -> ... mapping simplices of size s to size s-1,
// with sign (-1)^i for removing the i-th smallest vertex.
template <typename Scalar>
Matrix<Scalar> boundary(const std::vector<Mask>& lower, const std::vector<Mask>& upper) {
  Matrix<Scalar> d = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    Mask sigma = upper[c];
    int i = 0;
    for (Mask rest = sigma; rest; rest &= rest - 1, ++i) {
      Mask face = sigma & ~(rest & -rest);
      auto it = std::lower_bound(lower.begin(), lower.end(), face);
      d(static_cast<Eigen::Index>(it - lower.begin()), static_cast<Eigen::Index>(c)) = Scalar(i % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

template <typename Scalar>
std::vector<Integer> to_integers(const std::vector<Scalar>& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<Scalar, Integer>)
      out.push_back(x);
    else
      out.emplace_back(static_cast<long>(x.value()));
  }
  return out;
}

// dims[s] = #cells of size s; ranks[s] = rank of ∂ from size s to size s-1
// (ranks[0] = 0); torsion[s] = invariant factors > 1 of that map.
template <typename Scalar>
GradedGroups assemble(const std::vector<std::vector<Mask>>& cells, bool cohomology) {
  const std::size_t top = cells.size();  // sizes 0 .. top-1
  std::vector<long> rank(top + 1, 0);
  std::vector<std::vector<Integer>> tors(top + 1);
  for (std::size_t s = 1; s < top; ++s) {
    Matrix<Scalar> d = boundary<Scalar>(cells[s - 1], cells[s]);
    auto snf = cohomology ? smith_normal_form<Scalar>(d.transpose()) : smith_normal_form<Scalar>(std::move(d));
    rank[s] = static_cast<long>(snf.rank());
    tors[s] = to_integers(snf.torsion());
  }
  GradedGroups out;
  // Degree q = s - 1.
  for (std::size_t s = 0; s < top; ++s) {
    HomologyGroup g;
    g.rank = static_cast<long>(cells[s].size()) - rank[s] - rank[s + 1];
    // H_q torsion comes from the map out of degree q+1; H^q from the map into it.
    g.torsion = cohomology ? tors[s] : tors[s + 1];
    out.groups.push_back(std::move(g));
  }
  return out;
}

GradedGroups compute(const NerveComplex& k, Mask omega, bool cohomology) {
  auto cells = restricted_cells(k, omega);
  GradedGroups out;
  try {
    out = assemble<CheckedInt>(cells, cohomology);
  } catch (const Overflow&) {
    out = assemble<Integer>(cells, cohomology);
  }
  // Pad with zero groups up to the dimension of K.
  while (out.top_degree() < k.dimension()) out.groups.emplace_back();
  return out;
}

}  // namespace

GradedGroups reduced_homology(const NerveComplex& k, Mask omega) { return compute(k, omega, false); }

GradedGroups reduced_cohomology(const NerveComplex& k, Mask omega) { return compute(k, omega, true); }

}  // namespace belted
