#include "belted/rstar.hpp"

#include <stdexcept>

#include "belted/linalg.hpp"

namespace belted {

RStarClass RStarClass::monomial(Mask v, Mask u, const Integer& c) {
  if (v & u) throw std::invalid_argument("monomial: u_i v_i = 0");
  RStarClass r;
  r.add({v, u}, c);
  return r;
}

void RStarClass::add(const Monomial& x, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.emplace(x, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

std::pair<int, Mask> RStarClass::multidegree() const {
  if (terms.empty()) throw std::invalid_argument("zero element has no multidegree");
  auto deg = terms.begin()->first.multidegree();
  for (const auto& [x, c] : terms)
    if (x.multidegree() != deg) throw std::invalid_argument("inhomogeneous element");
  return deg;
}

RStarClass operator+(RStarClass a, const RStarClass& b) {
  for (const auto& [x, c] : b.terms) a.add(x, c);
  return a;
}

RStarClass operator-(RStarClass a, const RStarClass& b) {
  for (const auto& [x, c] : b.terms) a.add(x, -c);
  return a;
}

RStarClass operator*(const Integer& c, RStarClass a) {
  if (sgn(c) == 0) return {};
  for (auto& [x, coeff] : a.terms) coeff *= c;
  return a;
}

int exterior_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    Mask bit = rest & -rest;
    // elements of a above this element of b
    inversions += popcount(a & ~((bit << 1) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

RStarClass rstar_product(const NerveComplex& k, const RStarClass& a, const RStarClass& b) {
  if (a.is_zero() || b.is_zero()) return {};
  a.multidegree();
  b.multidegree();
  RStarClass out;
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms) {
      if ((x.v | x.u) & (y.v | y.u)) continue;
      Mask sigma = x.v | y.v;
      if (!k.contains(sigma)) continue;
      Integer c = cx * cy;
      if (exterior_sign(x.u, y.u) < 0) c = -c;
      out.add({sigma, x.u | y.u}, c);
    }
  return out;
}

RStarClass rstar_differential(const NerveComplex& k, const RStarClass& a) {
  RStarClass out;
  for (const auto& [x, c] : a.terms) {
    int below = 0;  // elements of A smaller than j
    for (Mask rest = x.u; rest; rest &= rest - 1, ++below) {
      Mask j = rest & -rest;
      Mask sigma = x.v | j;
      if (!k.contains(sigma)) continue;
      out.add({sigma, x.u & ~j}, below % 2 == 0 ? c : Integer(-c));
    }
  }
  return out;
}

namespace {

// Basis of the multidegree (-i, 2ω) piece: A ⊆ ω with |A| = i and ω \ A ∈ K.
std::vector<Monomial> basis(const NerveComplex& k, int i, Mask omega) {
  std::vector<Monomial> out;
  for (Mask a = omega;; a = (a - 1) & omega) {
    if (popcount(a) == i && k.contains(omega & ~a)) out.push_back({omega & ~a, a});
    if (a == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_coboundary(const NerveComplex& k, const RStarClass& x) {
  if (x.is_zero()) return true;
  auto [neg_i, omega] = x.multidegree();
  const int i = -neg_i;
  auto rows = basis(k, i, omega);
  auto cols = basis(k, i + 1, omega);
  IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  auto row_of = [&](const Monomial& mono) {
    auto it = std::lower_bound(rows.begin(), rows.end(), mono);
    if (it == rows.end() || *it != mono) throw std::logic_error("differential left its multidegree");
    return static_cast<Eigen::Index>(it - rows.begin());
  };
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto image = rstar_differential(k, RStarClass::monomial(cols[c].v, cols[c].u));
    for (const auto& [mono, coeff] : image.terms) d(row_of(mono), static_cast<Eigen::Index>(c)) = coeff;
  }
  Vector<Integer> target = Vector<Integer>::Zero(static_cast<Eigen::Index>(rows.size()));
  for (const auto& [mono, coeff] : x.terms) target(row_of(mono)) = coeff;
  if (cols.empty()) return false;
  return in_integer_image(smith_normal_form<Integer>(d, true), target);
}

bool h3_squared_trivial(const Polytope& p) {
  NerveComplex k = NerveComplex::of(p);
  const int m = p.facet_count();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!p.adjacent(i, j)) pairs.emplace_back(i, j);
  auto bit = [](int i) { return Mask{1} << i; };
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [s, t] = pairs[b];
      if (((bit(i) | bit(j)) & (bit(s) | bit(t))) != 0) continue;
      // [u_i v_j] = [u_j v_i] up to sign, so one representative per pair suffices.
      auto x = RStarClass::monomial(bit(j), bit(i));
      auto y = RStarClass::monomial(bit(t), bit(s));
      auto prod = rstar_product(k, x, y);
      if (!prod.is_zero() && !is_coboundary(k, prod)) return false;
    }
  return true;
}

}  // namespace belted
