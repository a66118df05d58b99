// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// gating criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "belted/belts.hpp"
#include "belted/betti.hpp"
#include "belted/builders.hpp"
#include "belted/canonical.hpp"
#include "belted/generator.hpp"
#include "belted/quasitoric.hpp"
#include "belted/rstar.hpp"
#include "belted/transform.hpp"

using namespace belted;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no time limit
  std::function<void(Outcome&)> body;
};

std::string f_text(const Polytope& p) {
  auto f = p.f_vector();
  return "(" + std::to_string(f.f0) + "," + std::to_string(f.f1) + "," + std::to_string(f.f2) + ")";
}

void builders(Outcome& o) {
  struct Case {
    const char* name;
    Polytope p;
    FVector f;
  };
  std::vector<Case> cases{{"dodecahedron", build::dodecahedron(), {20, 30, 12}},
                          {"tetrahedron", build::simplex(), {4, 6, 4}},
                          {"cube", build::cube(), {8, 12, 6}},
                          {"c60", build::c60(), {60, 90, 32}}};
  for (const auto& c : cases) {
    o.expect(c.p.f_vector() == c.f, std::string(c.name) + " f=" + f_text(c.p));
    o.expect(c.p.p_vector().satisfies_hexagon_balance(), std::string(c.name) + " p-vector identity");
    o.expect(validate(c.p.facets()).ok(), std::string(c.name) + " validation");
  }
}

void belt_theorems(Outcome& o) {
  struct Case {
    const char* name;
    Polytope p;
    std::size_t five;
  };
  std::vector<Case> cases{{"dodecahedron", build::dodecahedron(), 12}, {"barrel", build::barrel(), 12},
                          {"c60", build::c60(), 12},                   {"D1", build::d_k(1), 13},
                          {"D2", build::d_k(2), 14},                   {"D3", build::d_k(3), 15}};
  for (const auto& c : cases) {
    auto b3 = k_belts(c.p, 3).size(), b4 = k_belts(c.p, 4).size(), b5 = k_belts(c.p, 5).size();
    o.expect(b3 == 0, std::string(c.name) + " 3-belts=" + std::to_string(b3));
    o.expect(b4 == 0, std::string(c.name) + " 4-belts=" + std::to_string(b4));
    o.expect(b5 == c.five, std::string(c.name) + " 5-belts=" + std::to_string(b5));
  }
  o.notes << " 5-belts 12,12,12,13,14,15";
}

void betti_closed(Outcome& o) {
  auto d = build::dodecahedron();
  auto cf = betti_closed_forms(0, 12);
  o.expect(cf.fullerene_b_1_4 == 36 && cf.fullerene_b_2_6 == 160 && cf.fullerene_b_3_8 == 315, "closed forms");
  auto s = betti_bigraded(d, {BettiMode::Shortcuts});
  o.expect(s(1, 2) == 36, "shortcut b_1_4=" + std::to_string(s(1, 2)));
  o.expect(s(2, 3) == 160, "shortcut b_2_6=" + std::to_string(s(2, 3)));
  o.expect(s(3, 4) == 315, "shortcut b_3_8=" + std::to_string(s(3, 4)));
  BettiOptions sweep{BettiMode::UpToJ, 3};
  auto t = betti_bigraded(NerveComplex::of(d), 3, sweep);
  o.expect(t(1, 2) == 36, "sweep b_1_4=" + std::to_string(t(1, 2)));
  o.expect(t(2, 3) == 160, "sweep b_2_6=" + std::to_string(t(2, 3)));
  o.notes << " b_1_4=" << s(1, 2) << " b_2_6=" << s(2, 3) << " b_3_8=" << s(3, 4);
}

void full_sweep(Outcome& o) {
  struct Case {
    const char* name;
    Polytope p;
  };
  std::vector<Case> cases{{"simplex", build::simplex()},     {"cube", build::cube()},
                          {"prism5", build::prism(5)},       {"prism6", build::prism(6)},
                          {"dodecahedron", build::dodecahedron()}};
  for (const auto& c : cases) {
    auto k = NerveComplex::of(c.p);
    auto t = betti_bigraded(k, 3);
    o.expect(poincare_check(t), std::string(c.name) + " duality");
    o.expect(poly_identity_check(k, t), std::string(c.name) + " polynomial identity");
    o.expect(t.torsion_free(), std::string(c.name) + " torsion");
  }
}

void moment_angle(Outcome& o) {
  auto square = betti_bigraded(NerveComplex::polygon(4), 2).graded_ranks();
  std::vector<long> s3s3{1, 0, 0, 2, 0, 0, 1, 0, 0};
  o.expect(square == s3s3, "I^2 graded ranks");
  auto triangle = betti_bigraded(NerveComplex::polygon(3), 2).graded_ranks();
  std::vector<long> s5{1, 0, 0, 0, 0, 1, 0};
  o.expect(triangle == s5, "Delta^2 graded ranks");
}

void ring_structure(Outcome& o) {
  o.expect(h3_squared_trivial(build::dodecahedron()), "dodecahedron");
  o.expect(h3_squared_trivial(build::c60()), "c60");
  o.expect(!h3_squared_trivial(build::cube()), "cube");
}

void transformations(Outcome& o) {
  auto d = build::dodecahedron();
  o.expect(canonical_code(leapfrog(d), true) == canonical_code(build::c60(), true), "leapfrog(dodecahedron) != C60");
  auto ch = chamfer(d);
  o.expect(ch.p_vector()[6] == 30 && ch.vertex_count() == 80, "chamfer(dodecahedron) p6/f0");

  for (const auto& p : {build::dodecahedron(), build::barrel(), build::c60(), build::cube(), build::d_k(1)}) {
    long p6 = p.p_vector()[6];
    o.expect(chamfer(p).p_vector()[6] == p6 + p.edge_count(), "T1 law " + f_text(p));
    o.expect(leapfrog(p).p_vector()[6] == p6 + p.vertex_count(), "T2 law " + f_text(p));
  }

  std::vector<Polytope> small{build::simplex(), build::cube(), build::dodecahedron(),
                              build::tube(3, 0), build::tube(3, 1), build::tube(4, 0)};
  for (int k = 3; k <= 10; ++k) small.push_back(build::prism(k));
  long trips = 0;
  for (const auto& p : small) {
    if (p.facet_count() > 12) continue;
    for (const auto& spec : all_truncation_specs(p)) {
      auto r = straighten(sk_truncate(p, spec), spec.facet, p.facet_count());
      ++trips;
      if (!r.ok() || canonical_code(*r.polytope, false) != canonical_code(p, false)) {
        o.expect(false, "round trip " + f_text(p) + " facet " + std::to_string(spec.facet));
        return;
      }
    }
  }
  o.notes << " round trips=" << trips;
}

void generation(Outcome& o) {
  auto cat = generate(6);
  const std::vector<long> table{1, 0, 1, 1, 2, 3, 6};
  for (int p6 = 0; p6 <= 6; ++p6) {
    long got = cat.counts.at(p6);
    o.expect(got == table[static_cast<std::size_t>(p6)], "F(" + std::to_string(p6) + ")=" + std::to_string(got));
  }
  long members = 0;
  for (auto [m, n] : cat.level_sizes) members += n;
  for (const auto& [p6, list] : cat.fullerenes)
    for (const auto& p : list) o.expect(classify(p).kind == ClassKind::Fullerene, "member classification");
  o.notes << " F(0..6)=";
  for (int p6 = 0; p6 <= 6; ++p6) o.notes << (p6 ? "," : "") << cat.counts.at(p6);
  o.notes << " members verified=" << members;
}

void generation_extended(Outcome& o) {
  auto cat = generate(8);
  o.expect(cat.counts.at(7) == 6, "F(7)=" + std::to_string(cat.counts.at(7)));
  o.expect(cat.counts.at(8) == 15, "F(8)=" + std::to_string(cat.counts.at(8)));
  o.notes << " F(7)=" << cat.counts.at(7) << " F(8)=" << cat.counts.at(8);
}

void quasitoric(Outcome& o) {
  for (const auto& p : {build::dodecahedron(), build::barrel(), build::c60()}) {
    try {
      auto cm = char_matrix(p);
      o.expect(cm.minors.size() == static_cast<std::size_t>(p.vertex_count()), "minor count " + f_text(p));
    } catch (const std::exception& e) {
      o.expect(false, std::string("char_matrix: ") + e.what());
    }
  }
  std::vector<Polytope> ps{build::simplex(), build::cube(), build::dodecahedron(), build::barrel()};
  for (int k = 3; k <= 14; ++k) ps.push_back(build::prism(k));
  for (const auto& [p6, list] : generate(4).fullerenes)
    for (const auto& p : list) ps.push_back(p);
  int checked = 0;
  for (const auto& p : ps) {
    if (p.facet_count() > 16) continue;
    long m = p.facet_count();
    auto r = cohomology_ranks(presentation(p, char_matrix(p)));
    o.expect(r == std::vector<long>{1, m - 3, m - 3, 1, 0}, "ranks m=" + std::to_string(m));
    ++checked;
  }
  o.notes << " ranks checked on " << checked << " polytopes";
}

void chirality(Outcome& o) {
  std::vector<std::pair<const char*, Polytope>> cases{
      {"simplex", build::simplex()}, {"cube", build::cube()}, {"dodecahedron", build::dodecahedron()}, {"c60", build::c60()}};
  for (const auto& [name, p] : cases) {
    o.expect(!is_combinatorially_chiral(p), std::string(name) + " chiral");
    o.expect(canonical_code(p, false) == canonical_code(p.mirror(), false), std::string(name) + " mirror code");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> gating{
      {1, "builders and validation", 1, builders},
      {2, "belt theorems", 10, belt_theorems},
      {3, "bigraded Betti closed forms", 60, betti_closed},
      {4, "full-sweep identities", 300, full_sweep},
      {5, "moment-angle sanity", 1, moment_angle},
      {6, "ring structure", 0, ring_structure},
      {7, "transformations", 30, transformations},
      {8, "generation", 600, generation},
      {9, "quasitoric", 60, quasitoric},
      {10, "chirality", 0, chirality},
  };
  auto run = [](const Criterion& c, const char* tag) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s <= 0 || s < c.limit_s;
    if (!in_time) o.notes << " [over time limit]";
    bool pass = o.ok && in_time;
    std::printf("%s %s%d %s (%.3f s", pass ? "PASS" : "FAIL", tag, c.id, c.name.c_str(), s);
    if (c.limit_s > 0) std::printf(" < %g s", c.limit_s);
    std::printf(")%s\n", o.notes.str().c_str());
    std::fflush(stdout);
    return pass;
  };

  bool all = true;
  for (const auto& c : gating) all &= run(c, "");
  // Extended generation check; reported but not gating.
  run({8, "generation, extended to p6 = 8", 0, generation_extended}, "(non-gating) ");
  return all ? 0 : 1;
}
