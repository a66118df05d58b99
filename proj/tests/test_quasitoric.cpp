#include <doctest.h>

#include "belted/betti.hpp"
#include "belted/builders.hpp"
#include "belted/generator.hpp"
#include "belted/linalg.hpp"
#include "belted/quasitoric.hpp"

using namespace belted;

namespace {

// Exhaustive search for a proper colouring with `colors` colours, no pruning
// beyond rejecting a conflict with an earlier facet.
bool brute_colorable(const Polytope& p, int colors) {
  Coloring c(static_cast<std::size_t>(p.facet_count()), 0);
  auto rec = [&](auto&& self, int f) -> bool {
    if (f == p.facet_count()) return true;
    for (int col = 1; col <= colors; ++col) {
      bool ok = true;
      for (int g : p.facet_neighbors(f))
        if (g < f && c[static_cast<std::size_t>(g)] == col) ok = false;
      if (!ok) continue;
      c[static_cast<std::size_t>(f)] = col;
      if (self(self, f + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

void check_char_matrix(const Polytope& p) {
  auto coloring = four_color(p);
  REQUIRE(is_proper_coloring(p, coloring));
  auto cm = char_matrix(p, coloring);
  CHECK(cm.minors.size() == static_cast<std::size_t>(p.vertex_count()));
  for (const auto& d : cm.minors) CHECK(abs(d) == 1);
  CHECK(is_characteristic(NerveComplex::of(p), cm.lambda));
}

}  // namespace

TEST_CASE("colourings") {
  auto cube = build::cube();
  auto c = four_color(cube);
  CHECK(is_proper_coloring(cube, c));
  CHECK(*std::max_element(c.begin(), c.end()) == 3);

  auto d = build::dodecahedron();
  CHECK(!brute_colorable(d, 3));
  CHECK(brute_colorable(d, 4));
  auto cd = four_color(d);
  CHECK(is_proper_coloring(d, cd));
  CHECK(*std::max_element(cd.begin(), cd.end()) == 4);

  CHECK(is_proper_coloring(build::barrel(), four_color(build::barrel())));
  CHECK(is_proper_coloring(build::c60(), four_color(build::c60())));
  // Deterministic.
  CHECK(four_color(build::c60()) == four_color(build::c60()));
}

TEST_CASE("characteristic matrices from colourings") {
  for (const auto& p : {build::simplex(), build::cube(), build::dodecahedron(), build::barrel(), build::c60(), build::d_k(3),
                        build::prism(5), build::prism(7)})
    check_char_matrix(p);
}

TEST_CASE("adjacent equal colours are rejected") {
  auto p = build::dodecahedron();
  auto c = four_color(p);
  int g = p.facet_neighbors(0).front();
  c[static_cast<std::size_t>(g)] = c[0];
  CHECK(!is_proper_coloring(p, c));
  CHECK_THROWS_AS(char_matrix(p, c), std::invalid_argument);
}

TEST_CASE("pentagon characteristic matrix") {
  IntMatrix lambda(2, 5);
  lambda << 1, 0, 1, 0, 1,
            0, 1, 0, 1, 1;
  auto k = NerveComplex::polygon(5);
  CHECK(is_characteristic(k, lambda));
  auto pres = presentation(k, lambda);
  CHECK(cohomology_ranks(pres) == std::vector<long>{1, 3, 1, 0});

  IntMatrix bad = lambda;
  bad.col(1) = bad.col(0);
  CHECK(!is_characteristic(k, bad));
}

TEST_CASE("cohomology ranks") {
  auto ranks = [](const Polytope& p) { return cohomology_ranks(presentation(p, char_matrix(p))); };
  CHECK(ranks(build::simplex()) == std::vector<long>{1, 1, 1, 1, 0});
  CHECK(ranks(build::cube()) == std::vector<long>{1, 3, 3, 1, 0});
  CHECK(ranks(build::dodecahedron()) == std::vector<long>{1, 9, 9, 1, 0});
  CHECK(ranks(build::prism(5)) == std::vector<long>{1, 4, 4, 1, 0});

  auto cat = generate(4);
  for (const auto& [p6, list] : cat.fullerenes)
    for (const auto& p : list) {
      auto r = ranks(p);
      long m = 12 + p6;
      CHECK(r == std::vector<long>{1, m - 3, m - 3, 1, 0});
      auto h = h_vector(NerveComplex::of(p), 3);
      CHECK(std::vector<long>(r.begin(), r.end() - 1) == h);
    }
}

TEST_CASE("Stanley-Reisner relations") {
  auto simplex = presentation(build::simplex(), char_matrix(build::simplex()));
  REQUIRE(simplex.sr_relations.size() == 1);
  CHECK(monomial_text(simplex.sr_relations[0]) == "v1*v2*v3*v4");

  for (const auto& p : {build::cube(), build::dodecahedron(), build::c60()}) {
    auto pres = presentation(p, char_matrix(p));
    for (Mask s : pres.sr_relations) CHECK(popcount(s) == 2);
    // Non-adjacent facet pairs.
    long pairs = static_cast<long>(p.facet_count()) * (p.facet_count() - 1) / 2 - p.edge_count();
    CHECK(static_cast<long>(pres.sr_relations.size()) == pairs);
  }
  // The prism over a triangle has a non-quadratic relation from its 3-belt.
  auto prism = presentation(build::prism(3), char_matrix(build::prism(3)));
  bool cubic = false;
  for (Mask s : prism.sr_relations) cubic |= popcount(s) == 3;
  CHECK(cubic);
}

TEST_CASE("normalisation and first Chern class") {
  auto cube = build::cube();
  auto cm = char_matrix(cube);
  auto piv = pivot_facets(cube);
  CHECK(piv == std::array<int, 3>{0, 1, 2});
  IntMatrix n = normalize(cube, cm);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(n(r, piv[static_cast<std::size_t>(c)]) == (r == c ? 1 : 0));
  auto cc = char_class_presentation(cube, cm);
  // Opposite facets share a colour, so each relation reads v_i + v_{i+3} = 0.
  CHECK(cc.c1_text == "c1 = 0");
  CHECK(cc.chern_text == "C = (1+v1)(1+v2)(1+v3)(1+v4)(1+v5)(1+v6)");

  auto simplex = char_class_presentation(build::simplex(), char_matrix(build::simplex()));
  CHECK(simplex.chern_text == "C = (1+v1)(1+v2)(1+v3)(1+v4)");

  // Σ v_i - c1 must be a rational combination of the linear relations, and c1
  // must not involve the eliminated variables.
  for (const auto& p : {build::dodecahedron(), build::barrel(), build::prism(5)}) {
    auto pm = char_matrix(p);
    auto pc = char_class_presentation(p, pm);
    RationalMatrix stacked(4, p.facet_count());
    stacked.topRows(3) = pm.lambda.cast<Rational>();
    for (int j = 0; j < p.facet_count(); ++j) stacked(3, j) = Rational(1 - pc.c1[static_cast<std::size_t>(j)]);
    CHECK(field_rank(stacked) == 3);
    for (int f : pc.pivots) CHECK(pc.c1[static_cast<std::size_t>(f)] == 0);
  }
  auto d = build::dodecahedron();
  auto dc = char_class_presentation(d, char_matrix(d));
  CHECK(dc.pontryagin_text.find("(1+v12^2)") != std::string::npos);
}
