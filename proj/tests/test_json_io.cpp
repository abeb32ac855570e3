#include <catch2/catch_amalgamated.hpp>

#include "semicomm/json_io.hpp"
#include "semicomm/suite.hpp"
#include "test_helpers.hpp"

using namespace semicomm;
using namespace semicomm::test;
using semicomm::io::algebra_from_json;

TEST_CASE("semigroup json round trip", "[json]") {
  auto s = chain_semilattice(3);
  auto j = io::semigroup_to_json(s);
  REQUIRE(j["kind"] == "semigroup");
  REQUIRE(j["order"] == 3);
  auto back = algebra_from_json(j);
  REQUIRE(back.kind() == "semigroup");
  REQUIRE(back.flat() == s);
}

TEST_CASE("group json by table and by name", "[json]") {
  auto g = dihedral_group(3);
  auto back = io::group_from_json(io::group_to_json(g));
  REQUIRE(back == g);

  auto named = io::group_from_json(json{{"name", "dihedral"}, {"param", 3}});
  REQUIRE(named == g);
  REQUIRE(io::group_from_json(json{{"name", "quaternion8"}}) == quaternion_group());

  auto prod = io::group_from_json(
      json{{"name", "product"},
           {"factors", json::array({json{{"name", "cyclic"}, {"param", 2}},
                                    json{{"name", "cyclic"}, {"param", 2}}})}});
  REQUIRE(prod.order() == 4);

  REQUIRE_THROWS_AS(io::group_from_json(json{{"name", "sporadic"}}), InvalidInput);
  REQUIRE_THROWS_AS(algebra_from_json(json{{"kind", "group"}, {"table", {{0, 0}, {0, 1}}}}),
                    NotAGroup);
}

TEST_CASE("rees json round trip and normalization on load", "[json]") {
  json j{{"kind", "rees"},
         {"group", json{{"name", "cyclic"}, {"param", 4}}},
         {"I", 2},
         {"Lambda", 2},
         {"P", {{0, 0}, {0, 1}}}};
  auto a = algebra_from_json(j);
  REQUIRE(a.kind() == "rees");
  REQUIRE(a.rees() != nullptr);
  REQUIRE(a.rees()->order() == 16);
  REQUIRE(a.rees_input_was_normalized);

  auto back = algebra_from_json(io::rees_to_json(*a.rees()));
  REQUIRE(back.flat() == a.flat());

  // raw sandwich: normalized on load unless strict
  json raw = j;
  raw["P"] = {{2, 2}, {2, 3}};
  auto fixed = algebra_from_json(raw);
  REQUIRE(!fixed.rees_input_was_normalized);
  REQUIRE(fixed.rees()->p(0, 0) == 0);
  REQUIRE_THROWS_AS(algebra_from_json(raw, true), InvalidInput);
}

TEST_CASE("declared order must match", "[json]") {
  json j{{"kind", "semigroup"}, {"order", 5}, {"table", {{0, 0}, {0, 1}}}};
  REQUIRE_THROWS_AS(algebra_from_json(j), InvalidInput);
  REQUIRE_THROWS_AS(algebra_from_json(json{{"kind", "magma"}}), InvalidInput);
  REQUIRE_THROWS_AS(algebra_from_json(json{{"table", {{0}}}}), InvalidInput);
}

TEST_CASE("congruence json: blocks and pairs", "[json]") {
  auto z4 = cyclic_group(4).base();
  auto by_blocks = io::congruence_from_json(json{{"blocks", {{0, 2}, {1, 3}}}}, z4);
  REQUIRE(!by_blocks.closed_from_pairs);
  REQUIRE(by_blocks.partition == Partition::from_blocks(4, {{0, 2}, {1, 3}}));

  auto by_pairs = io::congruence_from_json(json{{"pairs", {{0, 2}}}}, z4);
  REQUIRE(by_pairs.closed_from_pairs);
  REQUIRE(by_pairs.partition == by_blocks.partition);

  // blocks that are no congruence are rejected with a witness
  REQUIRE_THROWS_AS(io::congruence_from_json(json{{"blocks", {{0, 1}, {2, 3}}}}, z4),
                    InvalidInput);
  REQUIRE_THROWS_AS(io::congruence_from_json(json{{"nope", 1}}, z4), InvalidInput);
}

TEST_CASE("triple json round trip", "[json]") {
  auto rs = build_rees(cyclic_group(4), 2, 2, {{0, 0}, {0, 1}});
  for (const auto& t : enumerate_triples(rs)) {
    auto j = io::triple_to_json(rs, t);
    auto back = io::triple_from_json(j, rs);
    REQUIRE(back == t);
  }
}

TEST_CASE("partition json lists canonical blocks", "[json]") {
  auto p = Partition::from_blocks(4, {{0, 2}, {1}, {3}});
  auto j = io::partition_to_json(p);
  REQUIRE(j["blocks"].size() == 3);
  REQUIRE(j["blocks"][0] == json::array({0, 2}));
}
