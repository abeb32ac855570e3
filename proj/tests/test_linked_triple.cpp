#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "semicomm/linked_triple.hpp"
#include "semicomm/suite.hpp"
#include "test_helpers.hpp"

using namespace semicomm;
using namespace semicomm::test;

namespace {

ReesMatrixSemigroup sample_rs() {
  return build_rees(cyclic_group(4), 2, 2, {{0, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("extraction of the extreme congruences", "[triple]") {
  auto rs = sample_rs();
  auto zero = triple_of_congruence(rs, Partition::singletons(rs.order()));
  REQUIRE(zero.rho_i.is_singletons());
  REQUIRE(zero.rho_g.is_singletons());
  REQUIRE(zero.rho_lambda.is_singletons());

  auto one = triple_of_congruence(rs, Partition::full(rs.order()));
  REQUIRE(one.rho_i.is_full());
  REQUIRE(one.rho_g.is_full());
  REQUIRE(one.rho_lambda.is_full());

  REQUIRE_THROWS_AS(
      triple_of_congruence(rs, Partition::from_blocks(16, {{0, 1}, {2, 3}, {4, 5}, {6, 7},
                                                           {8, 9}, {10, 11}, {12, 13},
                                                           {14, 15}})),
      NotACongruence);
}

TEST_CASE("Green's relations extract to their triples", "[triple]") {
  for (const auto& inst : small_suite()) {
    const auto& rs = inst.rs;
    auto greens = greens_relations(rs.flattened());
    CAPTURE(inst.label);

    auto h = triple_of_congruence(rs, greens.h);
    REQUIRE(h.rho_i.is_singletons());
    REQUIRE(h.rho_g.is_full());
    REQUIRE(h.rho_lambda.is_singletons());

    auto l = triple_of_congruence(rs, greens.l);
    REQUIRE(l.rho_i.is_full());
    REQUIRE(l.rho_g.is_full());
    REQUIRE(l.rho_lambda.is_singletons());

    auto r = triple_of_congruence(rs, greens.r);
    REQUIRE(r.rho_i.is_singletons());
    REQUIRE(r.rho_g.is_full());
    REQUIRE(r.rho_lambda.is_full());
  }
}

TEST_CASE("triples of the form (0, tau, 0) are always linked", "[triple]") {
  auto rs = build_rees(symmetric_group(3), 2, 2, {{0, 0}, {0, 3}});
  for (const auto& n : normal_subgroups(rs.group())) {
    LinkedTriple t{Partition::singletons(2), congruence_of_normal(rs.group(), n),
                   Partition::singletons(2)};
    REQUIRE(is_linked_triple(rs, t));
    REQUIRE(is_congruence(rs.flattened(), congruence_of_triple(rs, t)).ok);
  }
}

TEST_CASE("compatibility forces sandwich entries into rho_G", "[triple]") {
  // (1_I, 0_G, 1_Lambda) cannot be linked when some p entry is not the identity
  auto rs = sample_rs();
  LinkedTriple t{Partition::full(2), Partition::singletons(4), Partition::full(2)};
  REQUIRE(!is_linked_triple(rs, t));
  REQUIRE_THROWS_AS(congruence_of_triple(rs, t), NotLinked);

  LinkedTriple full{Partition::full(2), Partition::full(4), Partition::full(2)};
  REQUIRE(is_linked_triple(rs, full));
}

TEST_CASE("NotLinked carries a replayable witness", "[triple]") {
  auto rs = sample_rs();
  LinkedTriple t{Partition::full(2), Partition::singletons(4), Partition::full(2)};
  try {
    congruence_of_triple(rs, t);
    FAIL("expected NotLinked");
  } catch (const NotLinked& e) {
    auto rel = Partition::singletons(0);
    // rebuild the componentwise relation by hand and replay the witness
    std::vector<int> raw(rs.order());
    for (int x = 0; x < rs.order(); ++x) {
      auto el = rs.decode(x);
      raw[x] = (t.rho_i.block_of(el.i) * 4 + t.rho_g.block_of(el.g)) * 2
               + t.rho_lambda.block_of(el.lambda);
    }
    rel = Partition::from_block_ids(raw);
    auto [a, b, c, d] = e.witness;
    REQUIRE(rel.related(a, b));
    REQUIRE(rel.related(c, d));
    REQUIRE(!rel.related(rs.flattened().mul(a, c), rs.flattened().mul(b, d)));
  }
}

TEST_CASE("round trip through congruences, both directions", "[triple]") {
  for (const auto& inst : small_suite()) {
    CAPTURE(inst.label);
    auto triples = enumerate_triples(inst.rs);
    for (const auto& t : triples) {
      auto c = congruence_of_triple(inst.rs, t);
      REQUIRE(triple_of_congruence(inst.rs, c) == t);
    }
    for (const auto& c : enumerate_congruences(inst.rs.flattened())) {
      auto t = triple_of_congruence(inst.rs, c);
      REQUIRE(congruence_of_triple(inst.rs, t) == c);
    }
  }
}

TEST_CASE("triple count equals congruence count", "[triple]") {
  for (const auto& inst : small_suite()) {
    CAPTURE(inst.label);
    REQUIRE(enumerate_triples(inst.rs).size()
            == enumerate_congruences(inst.rs.flattened()).size());
  }
}

TEST_CASE("order preservation of the bijection", "[triple]") {
  auto rs = sample_rs();
  auto congs = enumerate_congruences(rs.flattened());
  for (const auto& a : congs) {
    for (const auto& b : congs) {
      auto ta = triple_of_congruence(rs, a);
      auto tb = triple_of_congruence(rs, b);
      REQUIRE(a.leq(b) == triple_leq(ta, tb));
    }
  }
}

TEST_CASE("triple lattice operations", "[triple]") {
  auto rs = sample_rs();
  auto greens = greens_relations(rs.flattened());
  auto h = triple_of_congruence(rs, greens.h);
  auto l = triple_of_congruence(rs, greens.l);
  auto r = triple_of_congruence(rs, greens.r);

  REQUIRE(triple_join(rs, h, h) == h);
  REQUIRE(triple_meet(rs, h, h) == h);
  REQUIRE(triple_join(rs, h, l) == l);  // componentwise comparable
  REQUIRE(triple_meet(rs, l, r) == h);

  // L v R collapses everything
  auto top = triple_join(rs, l, r);
  REQUIRE(top.rho_i.is_full());
  REQUIRE(top.rho_g.is_full());
  REQUIRE(top.rho_lambda.is_full());

  // join against the corresponding congruence join
  auto congs = enumerate_congruences(rs.flattened());
  for (const auto& a : congs) {
    for (const auto& b : congs) {
      auto tj = triple_join(rs, triple_of_congruence(rs, a), triple_of_congruence(rs, b));
      REQUIRE(congruence_of_triple(rs, tj) == congruence_join(rs.flattened(), a, b));
    }
  }
}

TEST_CASE("group case: one triple per normal subgroup", "[triple]") {
  auto rs = build_rees(quaternion_group(), 1, 1, {{0}});
  REQUIRE(enumerate_triples(rs).size() == normal_subgroups(rs.group()).size());
}

TEST_CASE("rectangular band triples are the index equivalence pairs", "[triple]") {
  auto band = build_rees(cyclic_group(1), 2, 2, {{0, 0}, {0, 0}});
  // trivial G: any pair of equivalences is linked
  REQUIRE(enumerate_triples(band).size() == 4);
}

TEST_CASE("componentwise join observation", "[triple][observation]") {
  // Whether the componentwise join of two linked triples is itself linked is
  // not something we rely on; the join goes through the flattened
  // congruences. Log what the suite shows, without asserting either way.
  long joins = 0, componentwise_linked = 0;
  for (const auto& inst : small_suite()) {
    auto triples = enumerate_triples(inst.rs);
    for (const auto& a : triples) {
      for (const auto& b : triples) {
        ++joins;
        LinkedTriple cw{a.rho_i.join(b.rho_i), a.rho_g.join(b.rho_g),
                        a.rho_lambda.join(b.rho_lambda)};
        if (is_linked_triple(inst.rs, cw)) {
          ++componentwise_linked;
        }
      }
    }
  }
  WARN("componentwise joins linked on this suite: " << componentwise_linked << "/" << joins);
  SUCCEED();
}
