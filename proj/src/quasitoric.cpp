#include "belted/quasitoric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "belted/linalg.hpp"

namespace belted {

namespace {

struct ColorSearch {
  const Polytope& p;
  std::vector<int> order;
  Coloring color;
  std::vector<unsigned> domain;  // bit c-1 set if colour c is still possible

  bool run(std::size_t pos) {
    if (pos == order.size()) return true;
    const int f = order[pos];
    for (int c = 1; c <= 4; ++c) {
      const unsigned bit = 1u << (c - 1);
      if (!(domain[static_cast<std::size_t>(f)] & bit)) continue;
      color[static_cast<std::size_t>(f)] = c;
      // Forward checking: strip c from uncoloured neighbours.
      std::vector<int> touched;
      bool dead = false;
      for (int g : p.facet_neighbors(f)) {
        auto& d = domain[static_cast<std::size_t>(g)];
        if (color[static_cast<std::size_t>(g)] != 0 || !(d & bit)) continue;
        d &= ~bit;
        touched.push_back(g);
        if (d == 0) dead = true;
      }
      if (!dead && run(pos + 1)) return true;
      for (int g : touched) domain[static_cast<std::size_t>(g)] |= bit;
      color[static_cast<std::size_t>(f)] = 0;
    }
    return false;
  }
};

std::vector<int> sorted_facets(const Polytope& p, int v) {
  const auto& f = p.vertex_facets(v);
  std::vector<int> out(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix columns(const IntMatrix& lambda, const std::vector<int>& cols) {
  IntMatrix out(lambda.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = lambda.col(cols[k]);
  return out;
}

bool unimodular(const Integer& d) { return d == 1 || d == -1; }

using Monomial = std::vector<int>;  // sorted variable indices, with repetition

Mask support(const Monomial& mu) {
  Mask s = 0;
  for (int i : mu) s |= Mask{1} << i;
  return s;
}

// Monomials of degree d whose support is a simplex of K.
std::vector<Monomial> face_monomials(const NerveComplex& k, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < k.vertex_count(); ++i) {
      cur.push_back(i);
      if (k.contains(support(cur))) self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string signed_term(const Integer& c, const std::string& var, bool first) {
  std::string out;
  Integer a = abs(c);
  if (c < 0) out += first ? "-" : " - ";
  else if (!first) out += " + ";
  if (a != 1) out += a.get_str() + "*";
  return out + var;
}

}  // namespace

Coloring four_color(const Polytope& p) {
  const int m = p.facet_count();
  ColorSearch s{p, std::vector<int>(static_cast<std::size_t>(m)), Coloring(static_cast<std::size_t>(m), 0),
                std::vector<unsigned>(static_cast<std::size_t>(m), 0xFu)};
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return p.gonality(a) > p.gonality(b); });
  if (!s.run(0)) throw IdentityViolation("four_color: no proper 4-colouring found");
  return s.color;
}

bool is_proper_coloring(const Polytope& p, const Coloring& c) {
  if (static_cast<int>(c.size()) != p.facet_count()) return false;
  for (int col : c)
    if (col < 1 || col > 4) return false;
  for (int i = 0; i < p.facet_count(); ++i)
    for (int j : p.facet_neighbors(i))
      if (c[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(j)]) return false;
  return true;
}

CharMatrix char_matrix(const Polytope& p, const Coloring& coloring) {
  const int m = p.facet_count();
  if (static_cast<int>(coloring.size()) != m) throw std::invalid_argument("char_matrix: colouring size differs from facet count");
  CharMatrix out;
  out.coloring = coloring;
  out.lambda = IntMatrix::Zero(3, m);
  for (int i = 0; i < m; ++i) {
    int c = coloring[static_cast<std::size_t>(i)];
    if (c < 1 || c > 4) throw std::invalid_argument("char_matrix: colours must lie in 1..4");
    if (c == 4) out.lambda.col(i).setConstant(1);
    else out.lambda(c - 1, i) = 1;
  }
  for (int v = 0; v < p.vertex_count(); ++v) {
    Integer d = integer_determinant(columns(out.lambda, sorted_facets(p, v)));
    if (!unimodular(d))
      throw std::invalid_argument("char_matrix: minor at vertex " + std::to_string(v) + " is " + d.get_str());
    out.minors.push_back(d);
  }
  return out;
}

bool is_characteristic(const NerveComplex& k, const IntMatrix& lambda) {
  const int n = static_cast<int>(lambda.rows());
  if (lambda.cols() != k.vertex_count() || k.dimension() != n - 1) return false;
  for (Mask s : k.simplices(n)) {
    std::vector<int> cols;
    for (int i = 0; i < k.vertex_count(); ++i)
      if (s >> i & 1) cols.push_back(i);
    if (!unimodular(integer_determinant(columns(lambda, cols)))) return false;
  }
  return true;
}

std::array<int, 3> pivot_facets(const Polytope& p) {
  std::vector<int> best;
  for (int v = 0; v < p.vertex_count(); ++v) {
    auto f = sorted_facets(p, v);
    if (best.empty() || f < best) best = f;
  }
  return {best[0], best[1], best[2]};
}

IntMatrix normalize(const Polytope& p, const CharMatrix& cm) {
  auto piv = pivot_facets(p);
  RationalMatrix lp(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) lp(r, c) = Rational(cm.lambda(r, piv[static_cast<std::size_t>(c)]));
  RationalMatrix n = rational_inverse(lp) * cm.lambda.cast<Rational>();
  IntMatrix out(n.rows(), n.cols());
  for (Eigen::Index r = 0; r < n.rows(); ++r)
    for (Eigen::Index c = 0; c < n.cols(); ++c) {
      if (n(r, c).get_den() != 1) throw IdentityViolation("normalize: non-integral entry");
      out(r, c) = n(r, c).get_num();
    }
  return out;
}

RingPresentation presentation(NerveComplex k, IntMatrix lambda) {
  if (lambda.cols() != k.vertex_count()) throw std::invalid_argument("presentation: Λ has the wrong number of columns");
  auto sr = k.minimal_nonfaces();
  return {std::move(k), std::move(lambda), std::move(sr)};
}

RingPresentation presentation(const Polytope& p, const CharMatrix& cm) {
  return presentation(NerveComplex::of(p), cm.lambda);
}

std::vector<long> cohomology_ranks(const RingPresentation& pres) {
  const auto& k = pres.complex;
  std::vector<long> ranks{1};
  auto prev = face_monomials(k, 0);
  for (int d = 1; d <= pres.n() + 1; ++d) {
    auto basis = face_monomials(k, d);
    std::map<Monomial, Eigen::Index> index;
    for (std::size_t b = 0; b < basis.size(); ++b) index.emplace(basis[b], static_cast<Eigen::Index>(b));
    // Rows: θ_r · μ for every relation r and μ of degree d - 1, non-faces dropped.
    RationalMatrix rel = RationalMatrix::Zero(static_cast<Eigen::Index>(pres.n() * prev.size()),
                                              static_cast<Eigen::Index>(basis.size()));
    Eigen::Index row = 0;
    for (int r = 0; r < pres.n(); ++r)
      for (const auto& mu : prev) {
        for (int i = 0; i < pres.m(); ++i) {
          if (pres.linear(r, i) == 0) continue;
          Monomial nu = mu;
          nu.insert(std::upper_bound(nu.begin(), nu.end(), i), i);
          auto it = index.find(nu);
          if (it != index.end()) rel(row, it->second) += Rational(pres.linear(r, i));
        }
        ++row;
      }
    ranks.push_back(static_cast<long>(basis.size()) - static_cast<long>(field_rank(std::move(rel))));
    prev = std::move(basis);
  }
  return ranks;
}

std::string monomial_text(Mask s) {
  std::string out;
  for (int i = 0; i < 64; ++i)
    if (s >> i & 1) out += (out.empty() ? "v" : "*v") + std::to_string(i + 1);
  return out.empty() ? "1" : out;
}

CharClasses char_class_presentation(const Polytope& p, const CharMatrix& cm) {
  CharClasses out;
  out.pivots = pivot_facets(p);
  IntMatrix n = normalize(p, cm);
  const int m = p.facet_count();
  out.c1.assign(static_cast<std::size_t>(m), 0);
  bool first = true;
  for (int j = 0; j < m; ++j) {
    if (std::find(out.pivots.begin(), out.pivots.end(), j) != out.pivots.end()) continue;
    // v_pivot(r) = -Σ_j n(r, j) v_j
    Integer c = 1;
    for (int r = 0; r < 3; ++r) c -= n(r, j);
    out.c1[static_cast<std::size_t>(j)] = c;
    if (c == 0) continue;
    out.c1_text += signed_term(c, "v" + std::to_string(j + 1), first);
    first = false;
  }
  if (first) out.c1_text = "0";
  out.c1_text = "c1 = " + out.c1_text;
  std::ostringstream c, pt;
  c << "C = ";
  pt << "P = ";
  for (int i = 1; i <= m; ++i) {
    c << "(1+v" << i << ")";
    pt << "(1+v" << i << "^2)";
  }
  out.chern_text = c.str();
  out.pontryagin_text = pt.str();
  return out;
}

}  // namespace belted
