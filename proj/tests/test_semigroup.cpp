#include <catch2/catch_amalgamated.hpp>

#include "semicomm/group.hpp"
#include "semicomm/rees.hpp"
#include "semicomm/semigroup.hpp"
#include "test_helpers.hpp"

using namespace semicomm;
using namespace semicomm::test;

TEST_CASE("make_semigroup validates shape, range and associativity", "[semigroup]") {
  REQUIRE(make_semigroup({{0}}).order() == 1);
  REQUIRE(make_semigroup({{0, 0}, {0, 1}}).order() == 2);   // meet semilattice
  REQUIRE(make_semigroup({{0, 1}, {1, 1}}).order() == 2);   // join semilattice

  REQUIRE_THROWS_AS(make_semigroup({{0, 1}, {1, 0}, {0, 1}}), MalformedTable);
  REQUIRE_THROWS_AS(make_semigroup({{0, 2}, {0, 1}}), MalformedTable);

  // x*y = (x+y) mod 2 with one entry broken: (0*0)*1 != 0*(0*1)
  try {
    make_semigroup({{1, 1}, {1, 0}});
    FAIL("expected NotAssociative");
  } catch (const NotAssociative& e) {
    int lhs = 0, rhs = 0;
    std::vector<std::vector<int>> t{{1, 1}, {1, 0}};
    lhs = t[t[e.a][e.b]][e.c];
    rhs = t[e.a][t[e.b][e.c]];
    REQUIRE(lhs != rhs);  // the witness replays
  }
}

TEST_CASE("is_regular with witness", "[semigroup]") {
  REQUIRE(is_regular(cyclic_group(5).base()).regular);
  REQUIRE(is_regular(chain_semilattice(2)).regular);

  auto check = is_regular(null_semigroup(2));
  REQUIRE(!check.regular);
  REQUIRE(check.witness == 1);  // 1*x*1 = 0 for every x
}

TEST_CASE("idempotents", "[semigroup]") {
  auto g = cyclic_group(6);
  REQUIRE(idempotents(g.base()) == std::vector<int>{g.identity()});
  REQUIRE(idempotents(chain_semilattice(2)) == std::vector<int>{0, 1});
  REQUIRE(idempotents(rectangular_band(2, 2)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("primitive idempotents", "[semigroup]") {
  auto g = cyclic_group(4);
  REQUIRE(is_primitive_idempotent(g.base(), g.identity()));

  auto sl = chain_semilattice(2);
  REQUIRE(!is_primitive_idempotent(sl, 1));  // 1*0 = 0*1 = 0 = 0*0 with 0 != 1
  REQUIRE(is_primitive_idempotent(sl, 0));
  REQUIRE_THROWS_AS(is_primitive_idempotent(null_semigroup(2), 1), NotIdempotent);
}

TEST_CASE("is_simple with witness", "[semigroup]") {
  auto sl = chain_semilattice(2);
  auto check = is_simple(sl);
  REQUIRE(!check.simple);
  REQUIRE(check.witness == 0);  // {0} is an ideal

  REQUIRE(is_simple(left_zero(2)).simple);
  REQUIRE(is_simple(symmetric_group(3).base()).simple);
}

TEST_CASE("is_completely_simple", "[semigroup]") {
  REQUIRE(is_completely_simple(rectangular_band(2, 2)));
  REQUIRE(!is_completely_simple(chain_semilattice(2)));
  REQUIRE(is_completely_simple(cyclic_group(4).base()));
  REQUIRE(!is_completely_simple(full_transformation_monoid_2()));
}

TEST_CASE("Green's relations on small semigroups", "[semigroup]") {
  auto g = greens_relations(cyclic_group(4).base());
  REQUIRE(g.r.is_full());
  REQUIRE(g.l.is_full());
  REQUIRE(g.h.is_full());

  auto lz = greens_relations(left_zero(2));
  REQUIRE(lz.l.is_full());         // S^1 a = S
  REQUIRE(lz.r.is_singletons());   // a S^1 = {a}
  REQUIRE(lz.h.is_singletons());

  auto rb = greens_relations(rectangular_band(2, 2));
  REQUIRE(rb.r.num_blocks() == 2);  // rows
  REQUIRE(rb.l.num_blocks() == 2);  // columns
  REQUIRE(rb.h.is_singletons());
  REQUIRE(rb.r.related(0, 1));
  REQUIRE(rb.l.related(0, 2));
}

TEST_CASE("H refines R and L; on completely simple all are congruences", "[semigroup]") {
  for (const auto& s : {rectangular_band(2, 3), left_zero(3), cyclic_group(6).base()}) {
    auto g = greens_relations(s);
    REQUIRE(g.h.leq(g.r));
    REQUIRE(g.h.leq(g.l));
    if (is_completely_simple(s)) {
      REQUIRE(is_congruence(s, g.r).ok);
      REQUIRE(is_congruence(s, g.l).ok);
      REQUIRE(is_congruence(s, g.h).ok);
    }
  }
}

TEST_CASE("H-classes of completely simple semigroups are maximal subgroups", "[semigroup]") {
  auto rs = build_rees(cyclic_group(3), 2, 2, {{0, 0}, {0, 1}});
  const auto& s = rs.flattened();
  auto h = greens_relations(s).h;
  for (const auto& block : h.blocks()) {
    int idems = 0;
    for (int x : block) {
      for (int y : block) {
        REQUIRE(h.related(s.mul(x, y), x));  // closed under the product
      }
      if (s.mul(x, x) == x) {
        ++idems;
      }
    }
    REQUIRE(idems == 1);
  }
}

TEST_CASE("inversion map", "[semigroup]") {
  auto g = cyclic_group(5);
  auto inv = inversion_map(g.base());
  for (int a = 0; a < 5; ++a) {
    REQUIRE(inv(a) == g.inverse(a));
  }

  auto rb = rectangular_band(2, 2);
  auto inv_rb = inversion_map(rb);
  for (int a = 0; a < rb.order(); ++a) {
    REQUIRE(inv_rb(a) == a);  // every element idempotent
  }

  REQUIRE_THROWS_AS(inversion_map(chain_semilattice(2)), NotCompletelySimple);
}

TEST_CASE("unary compatibility with congruences", "[semigroup]") {
  auto z4 = cyclic_group(4).base();
  auto congs = enumerate_congruences(z4);

  UnaryOp identity{4, {0, 1, 2, 3}};
  REQUIRE(unary_preserves_congruences(z4, identity, congs).compatible);

  // x -> x+1 then swap 1 and 2 breaks {0,2},{1,3}
  UnaryOp broken{4, {1, 1, 3, 0}};
  auto check = unary_preserves_congruences(z4, broken, congs);
  REQUIRE(!check.compatible);
  auto [k, a, b] = *check.witness;
  REQUIRE(congs[k].related(a, b));
  REQUIRE(!congs[k].related(broken(a), broken(b)));
}

TEST_CASE("inversion map is compatible with all congruences", "[semigroup]") {
  // the expansion by ^-1 leaves Con(S) unchanged on completely simple inputs
  auto rs = build_rees(symmetric_group(3), 2, 1, {{0, 0}});
  const auto& s = rs.flattened();
  auto congs = enumerate_congruences(s);
  REQUIRE(unary_preserves_congruences(s, inversion_map(s), congs).compatible);
}

TEST_CASE("complete simplicity agrees with the H-class characterization", "[semigroup]") {
  // simple + regular + every H-class a group
  for (const auto& s : {rectangular_band(2, 2), left_zero(3), cyclic_group(6).base(),
                        chain_semilattice(2), null_semigroup(3),
                        full_transformation_monoid_2(),
                        build_rees(symmetric_group(3), 2, 2, {{0, 0}, {0, 1}}).flattened()}) {
    bool simple = is_simple(s).simple;
    bool regular = is_regular(s).regular;
    bool h_groups = true;
    auto h = greens_relations(s).h;
    for (const auto& block : h.blocks()) {
      bool closed = true;
      int identity = -1;
      for (int x : block) {
        for (int y : block) {
          closed = closed && h.related(s.mul(x, y), x) && h.related(s.mul(x, y), y);
        }
      }
      for (int cand : block) {
        bool ok = true;
        for (int x : block) {
          ok = ok && s.mul(cand, x) == x && s.mul(x, cand) == x;
        }
        if (ok) {
          identity = cand;
        }
      }
      h_groups = h_groups && closed && identity != -1;
      if (!h_groups) {
        break;
      }
    }
    REQUIRE(is_completely_simple(s) == (simple && regular && h_groups));
  }
}
