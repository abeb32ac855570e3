#include <catch2/catch_amalgamated.hpp>

#include "semicomm/rees.hpp"
#include "semicomm/suite.hpp"
#include "test_helpers.hpp"

using namespace semicomm;
using namespace semicomm::test;

TEST_CASE("build_rees basic instances", "[rees]") {
  // group case: M[Z_2; 1, 1; [[e]]] is Z_2 itself
  auto z2 = build_rees(cyclic_group(2), 1, 1, {{0}});
  REQUIRE(z2.order() == 2);
  REQUIRE(z2.flattened() == cyclic_group(2).base());

  // trivial group, all-identity P: the 2x2 rectangular band
  auto band = build_rees(cyclic_group(1), 2, 2, {{0, 0}, {0, 0}});
  REQUIRE(band.order() == 4);
  REQUIRE(idempotents(band.flattened()).size() == 4);
  REQUIRE(is_completely_simple(band.flattened()));

  auto rs = build_rees(cyclic_group(4), 2, 2, {{0, 0}, {0, 1}});
  REQUIRE(rs.order() == 16);
  REQUIRE(is_completely_simple(rs.flattened()));
}

TEST_CASE("build_rees rejects bad sandwich matrices", "[rees]") {
  auto z2 = cyclic_group(2);
  REQUIRE_THROWS_AS(build_rees(z2, 2, 2, {{0, 0}, {1, 0}}), NotNormalized);
  REQUIRE_THROWS_AS(build_rees(z2, 2, 2, {{0, 1}, {0, 0}}), NotNormalized);
  REQUIRE_THROWS_AS(build_rees(z2, 2, 2, {{0, 0}}), MalformedTable);
  REQUIRE_THROWS_AS(build_rees(z2, 2, 2, {{0, 0}, {0, 7}}), OutOfRange);

  try {
    build_rees(z2, 2, 2, {{0, 0}, {1, 0}});
    FAIL("expected NotNormalized");
  } catch (const NotNormalized& e) {
    REQUIRE(e.row == 1);
    REQUIRE(e.col == 0);
  }
}

TEST_CASE("element codec", "[rees]") {
  auto rs = build_rees(cyclic_group(4), 2, 2, {{0, 0}, {0, 1}});
  REQUIRE(rs.encode(0, 0, 0) == 0);
  REQUIRE(rs.encode(1, 3, 1) == 15);  // (1*4 + 3)*2 + 1
  for (int x = 0; x < rs.order(); ++x) {
    auto e = rs.decode(x);
    REQUIRE(rs.encode(e.i, e.g, e.lambda) == x);
  }
  REQUIRE_THROWS_AS(rs.encode(2, 0, 0), OutOfRange);
  REQUIRE_THROWS_AS(rs.decode(16), OutOfRange);
}

TEST_CASE("multiplication law in coordinates", "[rees]") {
  auto g = symmetric_group(3);
  auto rs = build_rees(g, 2, 2, {{0, 0}, {0, 3}});
  for (int x = 0; x < rs.order(); ++x) {
    for (int y = 0; y < rs.order(); ++y) {
      auto a = rs.decode(x);
      auto b = rs.decode(y);
      int expected = rs.encode(a.i, g.mul(g.mul(a.g, rs.p(a.lambda, b.i)), b.g), b.lambda);
      REQUIRE(rs.flattened().mul(x, y) == expected);
    }
  }
}

TEST_CASE("sandwich normalization", "[rees]") {
  auto z2 = cyclic_group(2);

  // already normalized: identity map
  auto same = normalize_sandwich(z2, 2, 2, {{0, 0}, {0, 1}});
  REQUIRE(same.p == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  for (int x = 0; x < 8; ++x) {
    REQUIRE(same.carrier_map[x] == x);
  }

  auto fixed = normalize_sandwich(z2, 2, 2, {{1, 1}, {1, 0}});
  REQUIRE(fixed.p == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  // 1x1 always collapses to [[e]]
  auto one = normalize_sandwich(cyclic_group(3), 1, 1, {{2}});
  REQUIRE(one.p == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("normalization of random matrices is isomorphic by construction", "[rees]") {
  // normalize_sandwich verifies the isomorphism internally and throws on failure
  std::mt19937_64 rng(kDefaultSeed);
  auto g = symmetric_group(3);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<int>> p(2, std::vector<int>(3));
    for (auto& row : p) {
      for (auto& v : row) {
        v = pick(rng);
      }
    }
    auto norm = normalize_sandwich(g, 3, 2, p);
    REQUIRE(norm.p[0] == std::vector<int>{0, 0, 0});
    REQUIRE(norm.p[1][0] == 0);
  }
}

TEST_CASE("rees_decompose on a group", "[rees]") {
  auto dec = rees_decompose(cyclic_group(6).base());
  REQUIRE(dec.rs.i_size() == 1);
  REQUIRE(dec.rs.lambda_size() == 1);
  REQUIRE(dec.rs.group().order() == 6);
}

TEST_CASE("rees_decompose on a left-zero semigroup", "[rees]") {
  auto dec = rees_decompose(left_zero(2));
  REQUIRE(dec.rs.group().order() == 1);
  REQUIRE(dec.rs.i_size() == 2);
  REQUIRE(dec.rs.lambda_size() == 1);
}

TEST_CASE("rees_decompose rejects non-completely-simple input", "[rees]") {
  REQUIRE_THROWS_AS(rees_decompose(chain_semilattice(2)), NotCompletelySimple);
  REQUIRE_THROWS_AS(rees_decompose(full_transformation_monoid_2()), NotCompletelySimple);
}

TEST_CASE("decompose round trip preserves the profile", "[rees]") {
  for (const auto& inst : small_suite()) {
    auto dec = rees_decompose(inst.rs.flattened());
    CAPTURE(inst.label);
    REQUIRE(dec.rs.i_size() == inst.rs.i_size());
    REQUIRE(dec.rs.lambda_size() == inst.rs.lambda_size());
    REQUIRE(dec.rs.group().order() == inst.rs.group().order());
  }
}

TEST_CASE("decompose of a rectangular band", "[rees]") {
  auto dec = rees_decompose(rectangular_band(2, 2));
  REQUIRE(dec.rs.group().order() == 1);
  REQUIRE(dec.rs.i_size() * dec.rs.lambda_size() == 4);
}

TEST_CASE("named builtin instances", "[rees]") {
  auto d3 = builtin_instance("d3-paper");
  REQUIRE(d3.order() == 96);
  REQUIRE(d3.i_size() == 4);
  REQUIRE(d3.lambda_size() == 4);
  // entries cover the whole group
  std::vector<char> seen(d3.group().order(), 0);
  for (int l = 0; l < 4; ++l) {
    for (int i = 0; i < 4; ++i) {
      seen[d3.p(l, i)] = 1;
    }
  }
  REQUIRE(std::count(seen.begin(), seen.end(), 1) == d3.group().order());

  REQUIRE(builtin_instance("q8-paper").order() == 128);
  REQUIRE_THROWS_AS(builtin_instance("nope"), SemicommError);
}
