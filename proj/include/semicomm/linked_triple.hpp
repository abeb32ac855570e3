#pragma once

#include <utility>
#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/group.hpp"
#include "semicomm/rees.hpp"

namespace semicomm {

inline constexpr int kMaxIndexEnumeration = 6;

// Congruence coordinates (rho_I, rho_G, rho_Lambda): equivalences on the
// index sets plus a group congruence. Linkedness means the componentwise
// relation is a congruence of the flattened semigroup.
struct LinkedTriple {
  Partition rho_i;
  Partition rho_g;
  Partition rho_lambda;

  friend bool operator==(const LinkedTriple&, const LinkedTriple&) = default;
};

inline LinkedTriple triple_of_congruence(const ReesMatrixSemigroup& rs, const Partition& rho) {
  const auto& s = rs.flattened();
  auto check = is_congruence(s, rho);
  if (!check.ok) {
    throw NotACongruence("triple extraction requires a congruence");
  }
  const FiniteGroup& g = rs.group();

  detail::UnionFind uf_i(rs.i_size());
  for (int i = 0; i < rs.i_size(); ++i) {
    for (int j = i + 1; j < rs.i_size(); ++j) {
      bool all = true;
      for (int l = 0; l < rs.lambda_size(); ++l) {
        if (!rho.related(rs.encode(i, g.inverse(rs.p(l, i)), l),
                         rs.encode(j, g.inverse(rs.p(l, j)), l))) {
          all = false;
          break;
        }
      }
      if (all) {
        uf_i.unite(i, j);
      }
    }
  }

  detail::UnionFind uf_l(rs.lambda_size());
  for (int l = 0; l < rs.lambda_size(); ++l) {
    for (int m = l + 1; m < rs.lambda_size(); ++m) {
      bool all = true;
      for (int i = 0; i < rs.i_size(); ++i) {
        if (!rho.related(rs.encode(i, g.inverse(rs.p(l, i)), l),
                         rs.encode(i, g.inverse(rs.p(m, i)), m))) {
          all = false;
          break;
        }
      }
      if (all) {
        uf_l.unite(l, m);
      }
    }
  }

  detail::UnionFind uf_g(g.order());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (rho.related(rs.encode(0, a, 0), rs.encode(0, b, 0))) {
        uf_g.unite(a, b);
      }
    }
  }

  return LinkedTriple{Partition::from_union_find(uf_i), Partition::from_union_find(uf_g),
                      Partition::from_union_find(uf_l)};
}

namespace detail {

inline void check_triple_shape(const ReesMatrixSemigroup& rs, const LinkedTriple& t) {
  if (t.rho_i.size() != rs.i_size() || t.rho_g.size() != rs.group().order()
      || t.rho_lambda.size() != rs.lambda_size()) {
    throw MalformedTable("triple component sizes do not match the Rees structure");
  }
}

inline Partition componentwise_relation(const ReesMatrixSemigroup& rs, const LinkedTriple& t) {
  check_triple_shape(rs, t);
  std::vector<int> raw(rs.order());
  int gb = t.rho_g.num_blocks();
  int lb = t.rho_lambda.num_blocks();
  for (int x = 0; x < rs.order(); ++x) {
    auto e = rs.decode(x);
    raw[x] = (t.rho_i.block_of(e.i) * gb + t.rho_g.block_of(e.g)) * lb
             + t.rho_lambda.block_of(e.lambda);
  }
  return Partition::from_block_ids(std::move(raw));
}

}  // namespace detail

// Componentwise relation of the triple; throws NotLinked (with a violating
// quadruple) when it is not a congruence.
inline Partition congruence_of_triple(const ReesMatrixSemigroup& rs, const LinkedTriple& t) {
  auto rel = detail::componentwise_relation(rs, t);
  auto check = is_congruence(rs.flattened(), rel);
  if (!check.ok) {
    throw NotLinked(*check.witness);
  }
  return rel;
}

inline bool is_linked_triple(const ReesMatrixSemigroup& rs, const LinkedTriple& t) {
  auto rel = detail::componentwise_relation(rs, t);
  return is_congruence(rs.flattened(), rel).ok;
}

inline bool triple_leq(const LinkedTriple& a, const LinkedTriple& b) {
  return a.rho_i.leq(b.rho_i) && a.rho_g.leq(b.rho_g) && a.rho_lambda.leq(b.rho_lambda);
}

// Componentwise meet; the result is verified linked.
inline LinkedTriple triple_meet(const ReesMatrixSemigroup& rs, const LinkedTriple& a,
                                const LinkedTriple& b) {
  LinkedTriple t{a.rho_i.meet(b.rho_i), a.rho_g.meet(b.rho_g),
                 a.rho_lambda.meet(b.rho_lambda)};
  auto rel = detail::componentwise_relation(rs, t);
  auto check = is_congruence(rs.flattened(), rel);
  if (!check.ok) {
    throw NotLinked(*check.witness);
  }
  return t;
}

// Join goes through the flattened congruences; componentwise join of linked
// triples is not assumed linked.
inline LinkedTriple triple_join(const ReesMatrixSemigroup& rs, const LinkedTriple& a,
                                const LinkedTriple& b) {
  auto ca = congruence_of_triple(rs, a);
  auto cb = congruence_of_triple(rs, b);
  auto j = congruence_join(rs.flattened(), ca, cb, rs.order());
  return triple_of_congruence(rs, j);
}

// All linked triples, by filtering equivalences on I and Lambda against the
// normal subgroups of G. The scalable replacement for enumerate_congruences.
inline std::vector<LinkedTriple> enumerate_triples(const ReesMatrixSemigroup& rs) {
  if (rs.i_size() > kMaxIndexEnumeration || rs.lambda_size() > kMaxIndexEnumeration) {
    throw TooLarge("index set too large for triple enumeration");
  }
  auto parts_i = all_partitions(rs.i_size(), kMaxIndexEnumeration);
  auto parts_l = all_partitions(rs.lambda_size(), kMaxIndexEnumeration);
  std::vector<Partition> group_congruences;
  for (const auto& n : normal_subgroups(rs.group(), rs.group().order())) {
    group_congruences.push_back(congruence_of_normal(rs.group(), n));
  }
  std::vector<LinkedTriple> out;
  for (const auto& pi : parts_i) {
    for (const auto& tau : group_congruences) {
      for (const auto& pl : parts_l) {
        LinkedTriple t{pi, tau, pl};
        if (is_linked_triple(rs, t)) {
          out.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

// Convenience: the whole congruence lattice of the flattened semigroup,
// obtained through the triple bijection.
inline std::vector<Partition> congruences_via_triples(const ReesMatrixSemigroup& rs) {
  std::vector<Partition> out;
  for (const auto& t : enumerate_triples(rs)) {
    out.push_back(congruence_of_triple(rs, t));
  }
  return out;
}

}  // namespace semicomm
