#include <doctest.h>

#include <algorithm>

#include "belted/belts.hpp"
#include "belted/builders.hpp"
#include "oracles.hpp"

using namespace belted;

namespace {

std::set<std::vector<int>> as_subsets(const std::vector<Belt>& belts) {
  std::set<std::vector<int>> out;
  for (const auto& b : belts) {
    auto s = b.facets;
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("belt counts on small polytopes") {
  CHECK(k_belts(build::dodecahedron(), 5).size() == 12);
  CHECK(k_belts(build::cube(), 4).size() == 3);
  CHECK(k_belts(build::simplex(), 3).empty());
  CHECK(k_belts(build::cube(), 3).empty());
}

TEST_CASE("belt enumeration agrees with subset brute force") {
  for (const auto& p : {build::simplex(), build::cube(), build::dodecahedron(), build::barrel()})
    for (int k = 3; k <= std::min(p.facet_count(), 7); ++k) {
      auto belts = k_belts(p, k);
      CHECK(as_subsets(belts) == oracle::brute_belts(p, k));
      CHECK(std::is_sorted(belts.begin(), belts.end()));
      for (const auto& b : belts) CHECK(canonical_belt(b.facets) == b);
    }
}

TEST_CASE("three-belts appear after a vertex truncation") {
  // A triangle from truncating a cube vertex is surrounded by a 3-belt.
  std::vector<Cycle> facets{{0, 2, 6, 4}, {0, 1, 5, 4}, {0, 1, 3, 2}, {1, 3, 7, 5}, {2, 3, 7, 6}, {4, 5, 7, 6}};
  Polytope cube(orient_consistently(facets));
  // Replace vertex 7 by the triangle 8, 9, 10.
  std::vector<Cycle> cut;
  for (auto f : cube.facets()) {
    auto it = std::find(f.begin(), f.end(), 7);
    if (it != f.end()) {
      std::size_t pos = static_cast<std::size_t>(it - f.begin());
      int prev = f[(pos + f.size() - 1) % f.size()], next = f[(pos + 1) % f.size()];
      auto corner = [](int w) { return w == 3 ? 7 : (w == 5 ? 8 : 9); };
      Cycle g;
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t == pos) {
          g.push_back(corner(prev));
          g.push_back(corner(next));
        } else {
          g.push_back(f[t]);
        }
      }
      f = g;
    }
    cut.push_back(f);
  }
  cut.push_back({7, 8, 9});
  Polytope p(orient_consistently(cut));
  CHECK(k_belts(p, 3).size() == 1);
  CHECK(!is_flag(p));
  CHECK(facet_surrounded_by_belt(p, 6));
  CHECK(k_belts(p, 3)[0].facets.size() == 3);
  CHECK(oracle::brute_belts(p, 3).size() == 1);
}

TEST_CASE("flagness") {
  CHECK(is_flag(build::cube()));
  CHECK(!is_flag(build::simplex()));
  CHECK(is_flag(build::c60()));
  CHECK(is_flag(build::dodecahedron()));
}

TEST_CASE("facets surrounded by belts") {
  auto d = build::dodecahedron();
  for (int i = 0; i < d.facet_count(); ++i) CHECK(facet_surrounded_by_belt(d, i));
  auto c = build::cube();
  for (int i = 0; i < 6; ++i) CHECK(facet_surrounded_by_belt(c, i));
  auto s = build::simplex();
  for (int i = 0; i < 4; ++i) CHECK(!facet_surrounded_by_belt(s, i));
}

TEST_CASE("classification") {
  CHECK(classify(build::c60()).kind == ClassKind::Fullerene);
  CHECK(classify(build::dodecahedron()).kind == ClassKind::Fullerene);
  CHECK(classify(build::cube()).kind == ClassKind::NonMember);
  CHECK(classify(build::simplex()).kind == ClassKind::NonMember);
}

TEST_CASE("five-belt structure of fullerenes") {
  CHECK(five_belt_structure(build::dodecahedron()).count == 12);
  CHECK(!five_belt_structure(build::dodecahedron()).dk_index);
  auto c60 = five_belt_structure(build::c60());
  CHECK(c60.count == 12);
  CHECK(!c60.dk_index);
  for (int k = 1; k <= 3; ++k) {
    auto s = five_belt_structure(build::d_k(k));
    CHECK(s.count == 12 + k);
    REQUIRE(s.dk_index);
    CHECK(*s.dk_index == k);
  }
  CHECK_THROWS_AS(five_belt_structure(build::cube()), std::invalid_argument);
}

TEST_CASE("fullerenes have no 3- or 4-belts") {
  for (const auto& p : {build::dodecahedron(), build::barrel(), build::c60(), build::d_k(1), build::d_k(2)}) {
    CHECK(k_belts(p, 3).empty());
    CHECK(k_belts(p, 4).empty());
    CHECK(!has_4belt_not_surrounding_quad(p));
  }
  CHECK(!has_4belt_not_surrounding_quad(build::cube()));
}

TEST_CASE("zigzag cycles") {
  auto check = [](const Polytope& p, std::size_t count, std::size_t length) {
    auto z = zigzag_cycles(p);
    CHECK(z.size() == count);
    for (const auto& c : z) CHECK(c.size() == length);
    CHECK(std::set<std::vector<int>>(z.begin(), z.end()) == oracle::brute_zigzags(p));
  };
  check(build::dodecahedron(), 6, 10);
  check(build::cube(), 4, 6);
  check(build::simplex(), 3, 4);
}

TEST_CASE("zigzags agree with the oracle on larger inputs") {
  for (const auto& p : {build::barrel(), build::c60(), build::d_k(2)}) {
    auto z = zigzag_cycles(p);
    CHECK(std::set<std::vector<int>>(z.begin(), z.end()) == oracle::brute_zigzags(p));
    std::size_t total = 0;
    for (const auto& c : z) total += c.size();
    CHECK(total == 2 * static_cast<std::size_t>(p.edge_count()));
  }
}
