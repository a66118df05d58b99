#include "belted/betti.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "belted/belts.hpp"

namespace belted {

long BettiTable::operator()(int i, int j) const {
  auto it = ranks.find({i, j});
  return it == ranks.end() ? 0 : it->second;
}

bool BettiTable::has(int i, int j) const {
  switch (mode) {
    case BettiMode::Full: return true;
    case BettiMode::UpToJ: return j <= j_max || j >= m - j_max;
    case BettiMode::Shortcuts: return ranks.count({i, j}) > 0;
  }
  return false;
}

bool BettiTable::torsion_free() const {
  for (const auto& o : per_omega)
    for (const auto& [i, t] : o.torsion)
      if (!t.empty()) return false;
  return true;
}

std::vector<long> BettiTable::graded_ranks() const {
  std::vector<long> out(static_cast<std::size_t>(2 * m) + 1, 0);
  for (const auto& [ij, r] : ranks) {
    int d = 2 * ij.second - ij.first;
    if (d >= 0 && d < static_cast<int>(out.size())) out[static_cast<std::size_t>(d)] += r;
  }
  return out;
}

std::string betti_key(int i, int j) { return "b_" + std::to_string(i) + "_" + std::to_string(2 * j); }

namespace {

OmegaBetti omega_betti(const NerveComplex& k, Mask omega) {
  OmegaBetti out;
  out.omega = omega;
  const int size = popcount(omega);
  GradedGroups h = reduced_cohomology(k, omega);
  for (int q = -1; q <= h.top_degree(); ++q) {
    const auto& g = h.at(q);
    int i = size - q - 1;
    if (g.rank != 0) out.rank[i] = g.rank;
    if (!g.torsion.empty()) out.torsion[i] = g.torsion;
  }
  return out;
}

// Next subset of the same size (Gosper).
Mask next_same_size(Mask x) {
  Mask c = x & -x;
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<Mask> subsets_up_to(int m, int j_max) {
  if (m > 62) throw std::invalid_argument("subset sweep limited to m <= 62");
  std::vector<Mask> out{0};
  const Mask limit = Mask{1} << m;
  for (int s = 1; s <= std::min(j_max, m); ++s)
    for (Mask x = (Mask{1} << s) - 1; x < limit; x = next_same_size(x)) out.push_back(x);
  return out;
}

std::vector<OmegaBetti> sweep(const NerveComplex& k, const std::vector<Mask>& omegas, int threads) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(1, omegas.size() / 64)));
  std::vector<std::vector<OmegaBetti>> partial(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> cursor{0};
  constexpr std::size_t kChunk = 256;
  auto work = [&](int w) {
    for (;;) {
      std::size_t begin = cursor.fetch_add(kChunk);
      if (begin >= omegas.size()) return;
      std::size_t end = std::min(omegas.size(), begin + kChunk);
      for (std::size_t t = begin; t < end; ++t) {
        auto b = omega_betti(k, omegas[t]);
        if (!b.rank.empty() || !b.torsion.empty()) partial[static_cast<std::size_t>(w)].push_back(std::move(b));
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<OmegaBetti> out;
  for (auto& part : partial)
    for (auto& b : part) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(), [](const OmegaBetti& a, const OmegaBetti& b) { return a.omega < b.omega; });
  return out;
}

void aggregate(BettiTable& t) {
  t.ranks.clear();
  for (const auto& o : t.per_omega)
    for (const auto& [i, r] : o.rank) t.ranks[{i, popcount(o.omega)}] += r;
}

// Union-find component count of the facets in ω under adjacency.
int components(const Polytope& p, const std::vector<int>& omega) {
  std::vector<int> parent(omega.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int count = static_cast<int>(omega.size());
  for (std::size_t a = 0; a < omega.size(); ++a)
    for (std::size_t b = a + 1; b < omega.size(); ++b)
      if (p.adjacent(omega[a], omega[b])) {
        int ra = find(static_cast<int>(a)), rb = find(static_cast<int>(b));
        if (ra != rb) {
          parent[static_cast<std::size_t>(ra)] = rb;
          --count;
        }
      }
  return count;
}

BettiTable shortcuts(const Polytope& p) {
  BettiTable t;
  t.m = p.facet_count();
  t.n = 3;
  t.mode = BettiMode::Shortcuts;
  const int m = t.m;
  long disjoint = 0, s3 = 0, s4 = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!p.adjacent(a, b)) ++disjoint;
      for (int c = b + 1; c < m; ++c) {
        s3 += components(p, {a, b, c}) - 1;
        for (int d = c + 1; d < m; ++d) s4 += components(p, {a, b, c, d}) - 1;
      }
    }
  long belts3 = static_cast<long>(k_belts(p, 3).size());
  t.ranks[{1, 2}] = disjoint;
  t.ranks[{1, 3}] = belts3;
  t.ranks[{2, 3}] = s3;
  t.ranks[{3, 4}] = s4;
  if (belts3 == 0) {
    long belts4 = static_cast<long>(k_belts(p, 4).size());
    t.ranks[{2, 4}] = belts4;
    if (belts4 == 0) t.ranks[{3, 5}] = static_cast<long>(k_belts(p, 5).size());
  }
  return t;
}

}  // namespace

BettiTable betti_bigraded(const NerveComplex& k, int n, const BettiOptions& options) {
  BettiTable t;
  t.m = k.vertex_count();
  t.n = n;
  t.mode = options.mode;
  const int m = t.m;
  switch (options.mode) {
    case BettiMode::Shortcuts:
      throw std::invalid_argument("belt shortcuts need the polytope, not only its nerve");
    case BettiMode::Full: {
      if (m > kFullSweepLimit)
        throw std::invalid_argument("full sweep limited to m <= " + std::to_string(kFullSweepLimit) + "; use up_to_j or shortcuts");
      std::vector<Mask> all(std::size_t{1} << m);
      std::iota(all.begin(), all.end(), Mask{0});
      t.per_omega = sweep(k, all, options.threads);
      break;
    }
    case BettiMode::UpToJ: {
      if (options.j_max < 0) throw std::invalid_argument("j_max must be non-negative");
      t.j_max = options.j_max;
      auto low = sweep(k, subsets_up_to(m, options.j_max), options.threads);
      const Mask full = (Mask{1} << m) - 1;
      std::vector<OmegaBetti> high;
      for (const auto& o : low) {
        Mask c = full & ~o.omega;
        if (popcount(c) <= options.j_max) continue;  // computed directly
        OmegaBetti d;
        d.omega = c;
        for (auto [i, r] : o.rank) d.rank[m - n - i] = r;
        for (const auto& [i, tor] : o.torsion) d.torsion[m - n - i] = tor;
        high.push_back(std::move(d));
      }
      t.per_omega = std::move(low);
      for (auto& d : high) t.per_omega.push_back(std::move(d));
      std::sort(t.per_omega.begin(), t.per_omega.end(), [](const OmegaBetti& a, const OmegaBetti& b) { return a.omega < b.omega; });
      break;
    }
  }
  aggregate(t);
  return t;
}

BettiTable betti_bigraded(const Polytope& p, const BettiOptions& options) {
  if (options.mode == BettiMode::Shortcuts) return shortcuts(p);
  return betti_bigraded(NerveComplex::of(p), 3, options);
}

ClosedForms betti_closed_forms(int p6, int m) {
  if (m < 4) throw std::invalid_argument("closed forms need m >= 4");
  ClosedForms c;
  const long h = m - 3;
  c.h = h;
  c.b_1_4 = h * (h - 1) / 2;
  c.diff_2_6 = (h * h - 1) * (h - 3) / 3;
  c.diff_3_8 = (h + 1) * h * (h - 2) * (h - 5) / 8;
  const long q = p6;
  c.fullerene_b_1_4 = (8 + q) * (9 + q) / 2;
  c.fullerene_b_2_6 = (6 + q) * (8 + q) * (10 + q) / 3;
  c.fullerene_b_3_8 = (4 + q) * (7 + q) * (9 + q) * (10 + q) / 8;
  return c;
}

bool poincare_check(const BettiTable& t) {
  if (t.mode != BettiMode::Full) throw std::invalid_argument("poincare_check needs a full table");
  const Mask full = t.m == 64 ? ~Mask{0} : (Mask{1} << t.m) - 1;
  std::map<Mask, const OmegaBetti*> index;
  for (const auto& o : t.per_omega) index[o.omega] = &o;
  for (const auto& o : t.per_omega) {
    auto it = index.find(full & ~o.omega);
    if (it == index.end()) return false;
    std::map<int, long> dual;
    for (auto [i, r] : it->second->rank) dual[t.m - t.n - i] = r;
    if (dual != o.rank) return false;
  }
  return true;
}

std::vector<long> h_vector(const NerveComplex& k, int n) {
  // Σ h_k t^k = Σ_i f_i (t-1)^i, where f_i counts i-faces of the polytope,
  // i.e. simplices of K with n - i vertices (f_n = 1 for the empty simplex).
  std::vector<long> h(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    long f = static_cast<long>(k.simplices(n - i).size());
    // (t-1)^i = Σ_c C(i,c) t^c (-1)^{i-c}
    long binom = 1;
    for (int c = 0; c <= i; ++c) {
      long term = binom * f * (((i - c) % 2 == 0) ? 1 : -1);
      h[static_cast<std::size_t>(c)] += term;
      binom = binom * (i - c) / (c + 1);
    }
  }
  return h;
}

bool poly_identity_check(const NerveComplex& k, const BettiTable& t) {
  if (t.mode != BettiMode::Full) throw std::invalid_argument("poly_identity_check needs a full table");
  const int m = t.m, n = t.n;
  // Polynomials in s = t².
  std::vector<long> lhs = h_vector(k, n);
  for (int r = 0; r < m - n; ++r) {
    std::vector<long> next(lhs.size() + 1, 0);
    for (std::size_t c = 0; c < lhs.size(); ++c) {
      next[c] += lhs[c];
      next[c + 1] -= lhs[c];
    }
    lhs = std::move(next);
  }
  std::vector<long> rhs(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& [ij, r] : t.ranks) rhs[static_cast<std::size_t>(ij.second)] += (ij.first % 2 == 0 ? r : -r);
  lhs.resize(std::max(lhs.size(), rhs.size()), 0);
  rhs.resize(lhs.size(), 0);
  return lhs == rhs;
}

}  // namespace belted
