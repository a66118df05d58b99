#include "belted/generator.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "belted/belts.hpp"
#include "belted/builders.hpp"

namespace belted {

bool allowed_signature(const TruncationSignature& sig) {
  auto [lo, hi] = std::minmax(sig.m1, sig.m2);
  auto flanks = [&](int a, int b) { return lo == a && hi == b; };
  if (sig.s == 1) return flanks(4, 5) || flanks(5, 5);
  if (sig.s == 2 && sig.k == 6) return flanks(4, 5) || flanks(5, 5) || flanks(5, 6);
  if (sig.s == 2 && sig.k == 7) return flanks(5, 5) || flanks(5, 6);
  return false;
}

std::vector<TruncationSpec> applicable_truncations(const Polytope& p) {
  std::vector<TruncationSpec> out;
  for (const auto& spec : all_truncation_specs(p)) {
    if (spec.s > 2 || !allowed_signature(signature(p, spec))) continue;
    if (classify(sk_truncate(p, spec)).in_family()) out.push_back(spec);
  }
  return out;
}

namespace {

struct Member {
  CanonicalCode code;
  Polytope polytope;
};

void verify_member(const Polytope& p, const Classification& c) {
  if (has_4belt_not_surrounding_quad(p))
    throw IdentityViolation("singular fullerene with a 4-belt not surrounding a quadrangle");
  if (!k_belts(p, 3).empty()) throw IdentityViolation("singular fullerene with a 3-belt");
  if (c.kind != ClassKind::Fullerene) return;
  if (p.p_vector()[5] != 12) throw IdentityViolation("fullerene without 12 pentagons");
  if (!is_flag(p)) throw IdentityViolation("fullerene that is not flag");
  if (!k_belts(p, 4).empty()) throw IdentityViolation("fullerene with a 4-belt");
  five_belt_structure(p);
}

// Children of one member: (code, polytope) for every applicable truncation.
std::vector<Member> expand(const Polytope& p, long& applied) {
  std::vector<Member> out;
  for (const auto& spec : all_truncation_specs(p)) {
    if (spec.s > 2 || !allowed_signature(signature(p, spec))) continue;
    Polytope q = sk_truncate(p, spec);
    ++applied;
    if (!classify(q).in_family()) continue;
    out.push_back({canonical_code(q, true), std::move(q)});
  }
  return out;
}

}  // namespace

Catalog generate(int p6_max, const GeneratorOptions& options) {
  if (p6_max < 0) throw std::invalid_argument("generate: p6_max must be non-negative");
  Catalog cat;
  cat.p6_max = p6_max;
  cat.chiral = options.chiral;
  // Every truncation adds one facet and a fullerene with p6 hexagons has
  // 12 + p6 facets, so no useful intermediate exceeds that.
  const int max_facets = 12 + p6_max;
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<Member> level;
  {
    Polytope d = build::dodecahedron();
    level.push_back({canonical_code(d, true), std::move(d)});
  }
  for (int facets = 12; facets <= max_facets; ++facets) {
    cat.level_sizes[facets] = static_cast<long>(level.size());
    for (const Member& mem : level) {
      Classification c = classify(mem.polytope);
      if (options.verify) verify_member(mem.polytope, c);
      if (c.kind == ClassKind::Fullerene) {
        int p6 = facets - 12;
        cat.codes[p6].push_back(mem.code);
        cat.fullerenes[p6].push_back(mem.polytope);
        cat.counts[p6] += 1;
        cat.chiral_counts[p6] += is_combinatorially_chiral(mem.polytope) ? 2 : 1;
      }
    }
    if (facets == max_facets) break;

    // Expand the level in parallel; merge deterministically by code.
    std::vector<std::vector<Member>> partial(level.size());
    std::vector<long> applied(level.size(), 0);
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t t; (t = cursor.fetch_add(1)) < level.size();) partial[t] = expand(level[t].polytope, applied[t]);
    };
    int n = std::min<int>(threads, static_cast<int>(level.size()));
    if (n <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < n; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    std::vector<Member> next;
    for (std::size_t t = 0; t < partial.size(); ++t) {
      cat.truncations_applied += applied[t];
      for (auto& mem : partial[t]) next.push_back(std::move(mem));
    }
    std::stable_sort(next.begin(), next.end(), [](const Member& a, const Member& b) { return a.code < b.code; });
    next.erase(std::unique(next.begin(), next.end(), [](const Member& a, const Member& b) { return a.code == b.code; }), next.end());
    level = std::move(next);
  }
  for (int p6 = 0; p6 <= p6_max; ++p6) {
    cat.counts.try_emplace(p6, 0);
    cat.chiral_counts.try_emplace(p6, 0);
    cat.codes.try_emplace(p6);
    cat.fullerenes.try_emplace(p6);
  }
  return cat;
}

Polytope icosahedral_word(const std::vector<IcosahedralOp>& word) {
  Polytope p = build::dodecahedron();
  for (IcosahedralOp op : word) p = op == IcosahedralOp::T1 ? chamfer(p) : leapfrog(p);
  return p;
}

}  // namespace belted
