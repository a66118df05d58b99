#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "belted/builders.hpp"
#include "belted/canonical.hpp"
#include "belted/io.hpp"
#include "oracles.hpp"

using namespace belted;

TEST_CASE("builders have the expected face counts") {
  CHECK(build::simplex().f_vector() == FVector{4, 6, 4});
  CHECK(build::cube().f_vector() == FVector{8, 12, 6});
  CHECK(build::dodecahedron().f_vector() == FVector{20, 30, 12});
  CHECK(build::c60().f_vector() == FVector{60, 90, 32});
  auto barrel = build::barrel();
  CHECK(barrel.facet_count() == 14);
  CHECK(barrel.p_vector()[5] == 12);
  CHECK(barrel.p_vector()[6] == 2);
  for (int k = 0; k <= 4; ++k) {
    auto d = build::d_k(k);
    CHECK(d.vertex_count() == 20 + 10 * k);
    CHECK(d.p_vector()[5] == 12);
    CHECK(d.p_vector()[6] == 5 * k);
    CHECK(d.p_vector().satisfies_hexagon_balance());
  }
}

TEST_CASE("d_0 is the dodecahedron") {
  CHECK(canonical_code(build::d_k(0), true) == canonical_code(build::dodecahedron(), true));
  CHECK(oracle::isomorphic(build::d_k(0), build::dodecahedron()));
}

TEST_CASE("rotation system is consistent with facets") {
  for (const auto& p : {build::cube(), build::dodecahedron(), build::c60()}) {
    for (int v = 0; v < p.vertex_count(); ++v)
      for (int k = 0; k < 3; ++k) {
        int u = p.neighbors(v)[static_cast<std::size_t>(k)];
        CHECK(p.rotate(v, u) == p.neighbors(v)[static_cast<std::size_t>((k + 1) % 3)]);
        CHECK(p.rotate_back(v, p.rotate(v, u)) == u);
        int f = p.vertex_facets(v)[static_cast<std::size_t>(k)];
        CHECK(f == p.dart_facet(v, u));
      }
  }
}

TEST_CASE("validation reports the first failing check") {
  SUBCASE("reversed facet") {
    auto facets = build::cube().facets();
    std::reverse(facets[0].begin(), facets[0].end());
    auto report = validate(facets);
    REQUIRE(!report.ok());
    CHECK(report.first_failure()->name == "rotation_system");
    CHECK_THROWS_AS(Polytope{facets}, PolytopeError);
  }
  SUBCASE("two tetrahedra") {
    auto tetra = build::simplex();
    auto facets = tetra.facets();
    for (auto f : tetra.facets()) {
      for (int& v : f) v += 4;
      facets.push_back(f);
    }
    auto report = validate(facets);
    REQUIRE(!report.ok());
    CHECK(report.first_failure()->name == "euler");
    try {
      Polytope p(facets);
      FAIL("accepted");
    } catch (const PolytopeError& e) {
      CHECK(e.kind() == PolytopeErrorKind::Euler);
    }
  }
  SUBCASE("vertex of degree four") {
    // Square pyramid.
    std::vector<Cycle> facets{{0, 3, 2, 1}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    CHECK(validate(facets).first_failure()->name == "simple_vertices");
  }
  SUBCASE("too few facets") {
    std::vector<Cycle> facets{{0, 1, 2}, {0, 2, 1}};
    CHECK(!validate(facets).ok());
  }
  SUBCASE("valid inputs pass every check") {
    auto report = validate(build::c60().facets());
    CHECK(report.ok());
    CHECK(report.find("three_connected")->passed);
  }
}

TEST_CASE("p-vector identities") {
  for (const auto& p : {build::simplex(), build::cube(), build::dodecahedron(), build::c60(), build::barrel()}) {
    auto pv = p.p_vector();
    CHECK(pv.facet_count() == p.facet_count());
    CHECK(pv.side_count() == 2 * p.edge_count());
    CHECK(pv.satisfies_hexagon_balance());
  }
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937 rng(17);
  for (const auto& p : {build::cube(), build::dodecahedron(), build::barrel(), build::d_k(2), build::c60()}) {
    auto code = canonical_code(p, false);
    for (int trial = 0; trial < 5; ++trial) {
      auto q = oracle::relabel(p, rng);
      CHECK(canonical_code(q, false) == code);
      CHECK(oracle::isomorphic(p, q));
    }
    CHECK(canonical_code(p.mirror().mirror(), false) == code);
    CHECK(canonical_code(p.mirror(), true) == canonical_code(p, true));
  }
}

TEST_CASE("canonical code separates non-isomorphic polytopes") {
  CHECK(canonical_code(build::barrel(), true) != canonical_code(build::d_k(1), true));
  CHECK(canonical_code(build::d_k(1), true) != canonical_code(build::d_k(2), true));
}

TEST_CASE("small symmetric polytopes are achiral") {
  for (const auto& p : {build::simplex(), build::cube(), build::dodecahedron(), build::c60(), build::d_k(3)})
    CHECK(!is_combinatorially_chiral(p));
}

TEST_CASE("json round trip is exact") {
  for (const auto& p : {build::cube(), build::c60(), build::d_k(1)}) {
    auto text = io::to_json(p);
    auto q = io::parse(text, io::Format::Json);
    CHECK(q.facets() == p.facets());
    CHECK(io::to_json(q) == text);
  }
}

TEST_CASE("planar_code round trip preserves the oriented polytope") {
  for (const auto& p : {build::simplex(), build::dodecahedron(), build::c60()}) {
    auto bytes = io::to_planar_code(p);
    auto q = io::parse_auto(bytes);
    CHECK(q.vertex_count() == p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) CHECK(q.neighbors(v) == p.neighbors(v));
    CHECK(canonical_code(q, false) == canonical_code(p, false));
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(io::parse("{\"facets\": 3}", io::Format::Json), PolytopeError);
  CHECK_THROWS_AS(io::parse("not json", io::Format::Json), PolytopeError);
  CHECK_THROWS_AS(io::parse(">>planar_code<<\x04\x02", io::Format::PlanarCode), PolytopeError);
}
