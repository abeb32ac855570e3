#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semicomm/partition.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

inline constexpr int kMaxClosureOrder = 256;
inline constexpr int kMaxLatticeOrder = 64;

// Least congruence containing the seed partition and the extra pairs.
// Union-find with a worklist: whenever a ~ b is merged, merge ta ~ tb and
// at ~ bt for every t and iterate to the fixpoint.
inline Partition congruence_closure(const FiniteSemigroup& s, const Partition& seed,
                                    const std::vector<std::pair<int, int>>& pairs,
                                    int guard = kMaxClosureOrder) {
  int n = s.order();
  if (n > guard) {
    throw TooLarge("congruence closure refused for order " + std::to_string(n) + " (guard "
                   + std::to_string(guard) + ")");
  }
  detail::UnionFind uf(n);
  std::vector<std::pair<int, int>> todo;
  auto merge = [&](int a, int b) {
    if (uf.unite(a, b)) {
      todo.emplace_back(a, b);
    }
  };
  if (seed.size() != 0) {
    if (seed.size() != n) {
      throw MalformedTable("seed partition carrier size does not match the semigroup");
    }
    for (auto [a, b] : seed.spanning_pairs()) {
      merge(a, b);
    }
  }
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw OutOfRange("pair (" + std::to_string(a) + ", " + std::to_string(b)
                       + ") out of range");
    }
    merge(a, b);
  }
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    for (int t = 0; t < n; ++t) {
      merge(s.mul(t, a), s.mul(t, b));
      merge(s.mul(a, t), s.mul(b, t));
    }
  }
  return Partition::from_union_find(uf);
}

inline Partition congruence_from_pairs(const FiniteSemigroup& s,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       int guard = kMaxClosureOrder) {
  return congruence_closure(s, Partition{}, pairs, guard);
}

struct CongruenceCheck {
  bool ok = false;
  // (a, b, c, d): a ~ b and c ~ d but ac !~ bd.
  std::optional<std::array<int, 4>> witness;

  explicit operator bool() const { return ok; }
};

// Compatibility check. It is enough to test the spanning pairs of each
// block against left and right translations; transitivity covers the rest.
inline CongruenceCheck is_congruence(const FiniteSemigroup& s, const Partition& part) {
  if (part.size() != s.order()) {
    throw MalformedTable("partition carrier size does not match the semigroup");
  }
  for (auto [a, b] : part.spanning_pairs()) {
    for (int t = 0; t < s.order(); ++t) {
      if (!part.related(s.mul(t, a), s.mul(t, b))) {
        return {false, std::array<int, 4>{t, t, a, b}};
      }
      if (!part.related(s.mul(a, t), s.mul(b, t))) {
        return {false, std::array<int, 4>{a, b, t, t}};
      }
    }
  }
  return {true, std::nullopt};
}

inline Partition congruence_join(const FiniteSemigroup& s, const Partition& a,
                                 const Partition& b, int guard = kMaxClosureOrder) {
  auto pairs = a.spanning_pairs();
  auto more = b.spanning_pairs();
  pairs.insert(pairs.end(), more.begin(), more.end());
  return congruence_closure(s, Partition{}, pairs, guard);
}

// The full congruence lattice: join-closure of the principal congruences,
// plus the identity. Sorted by (#blocks descending, lexicographic ids).
inline std::vector<Partition> enumerate_congruences(const FiniteSemigroup& s,
                                                    int guard = kMaxLatticeOrder) {
  int n = s.order();
  if (n > guard) {
    throw TooLarge("congruence lattice enumeration refused for order " + std::to_string(n)
                   + " (guard " + std::to_string(guard) + ")");
  }
  std::set<Partition> found;
  found.insert(Partition::singletons(n));
  std::vector<Partition> frontier;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto p = congruence_from_pairs(s, {{a, b}}, guard);
      if (found.insert(p).second) {
        frontier.push_back(p);
      }
    }
  }
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    std::vector<Partition> snapshot(found.begin(), found.end());
    for (const auto& other : snapshot) {
      auto j = congruence_join(s, cur, other, guard);
      if (found.insert(j).second) {
        frontier.push_back(j);
      }
    }
  }
  std::vector<Partition> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.num_blocks() != y.num_blocks()) {
      return x.num_blocks() > y.num_blocks();
    }
    return x.block_ids() < y.block_ids();
  });
  return out;
}

// S/eta: elements are the blocks of eta, product of blocks is the block of
// any representative product.
inline FiniteSemigroup quotient_semigroup(const FiniteSemigroup& s, const Partition& eta) {
  auto check = is_congruence(s, eta);
  if (!check.ok) {
    throw NotACongruence("quotient requires a congruence");
  }
  int k = eta.num_blocks();
  std::vector<int> rep(k, -1);
  for (int x = 0; x < s.order(); ++x) {
    if (rep[eta.block_of(x)] == -1) {
      rep[eta.block_of(x)] = x;
    }
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[i][j] = eta.block_of(s.mul(rep[i], rep[j]));
    }
  }
  return FiniteSemigroup(std::move(table));
}

// Image of theta >= eta in S/eta.
inline Partition push_to_quotient(const Partition& eta, const Partition& theta) {
  if (!eta.leq(theta)) {
    throw MalformedTable("push_to_quotient requires eta <= theta");
  }
  std::vector<int> raw(eta.num_blocks(), -1);
  for (int x = 0; x < eta.size(); ++x) {
    raw[eta.block_of(x)] = theta.block_of(x);
  }
  return Partition::from_block_ids(std::move(raw));
}

// Preimage in S of a congruence on S/eta.
inline Partition pull_from_quotient(const Partition& eta, const Partition& on_quotient) {
  std::vector<int> raw(eta.size());
  for (int x = 0; x < eta.size(); ++x) {
    raw[x] = on_quotient.block_of(eta.block_of(x));
  }
  return Partition::from_block_ids(std::move(raw));
}

}  // namespace semicomm
