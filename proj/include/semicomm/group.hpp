#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

// Finite group: a semigroup with identity and inverse table, both inferred
// and validated at construction.
class FiniteGroup {
 public:
  explicit FiniteGroup(FiniteSemigroup base) : base_(std::move(base)) {
    int n = base_.order();
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n; ++a) {
        if (base_.mul(e, a) != a || base_.mul(a, e) != a) {
          ok = false;
          break;
        }
      }
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == -1) {
      throw NotAGroup("no two-sided identity");
    }
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x) {
        if (base_.mul(a, x) == identity_ && base_.mul(x, a) == identity_) {
          inverse_[a] = x;
          break;
        }
      }
      if (inverse_[a] == -1) {
        throw NotAGroup("element " + std::to_string(a) + " has no inverse");
      }
    }
  }

  FiniteGroup(std::vector<std::vector<int>> table, std::string name = "")
      : FiniteGroup(FiniteSemigroup(std::move(table), std::move(name))) {}

  const FiniteSemigroup& base() const { return base_; }
  int order() const { return base_.order(); }
  const std::string& name() const { return base_.name(); }

  int mul(int a, int b) const { return base_.mul(a, b); }
  int mul(int a, int b, int c) const { return base_.mul(a, b, c); }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int a) const { return mul(g, a, inverse_[g]); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.base_ == b.base_;
  }

 private:
  FiniteSemigroup base_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

inline FiniteGroup make_group(std::vector<std::vector<int>> table, std::string name = "") {
  return FiniteGroup(std::move(table), std::move(name));
}

// ---- named constructions -------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) {
    throw MalformedTable("cyclic group needs n >= 1");
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

// Order 2n; element r^i f^j is encoded as j*n + i, with f r f^-1 = r^-1.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) {
    throw MalformedTable("dihedral group needs n >= 1");
  }
  int m = 2 * n;
  auto enc = [n](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i1 = 0; i1 < n; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < n; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? (i1 + i2) % n : (i1 - i2 + n) % n;
          t[enc(i1, j1)][enc(i2, j2)] = enc(i, j1 ^ j2);
        }
      }
    }
  }
  return FiniteGroup(std::move(t), "D" + std::to_string(n));
}

// {1,-1,i,-i,j,-j,k,-k} encoded as 2*basis + sign with basis 0:1, 1:i, 2:j, 3:k.
inline FiniteGroup quaternion_group() {
  auto enc = [](int sign, int basis) { return 2 * basis + (sign < 0 ? 1 : 0); };
  // basis multiplication: (sign, basis) for b1*b2
  auto basis_mul = [](int b1, int b2) -> std::pair<int, int> {
    if (b1 == 0) return {1, b2};
    if (b2 == 0) return {1, b1};
    if (b1 == b2) return {-1, 0};
    // i*j=k, j*k=i, k*i=j; reversed order flips the sign
    static constexpr int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    int b = third[b1][b2];
    bool forward = (b1 == 1 && b2 == 2) || (b1 == 2 && b2 == 3) || (b1 == 3 && b2 == 1);
    return {forward ? 1 : -1, b};
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int s1 = x % 2 == 0 ? 1 : -1, b1 = x / 2;
      int s2 = y % 2 == 0 ? 1 : -1, b2 = y / 2;
      auto [s, b] = basis_mul(b1, b2);
      t[x][y] = enc(s1 * s2 * s, b);
    }
  }
  return FiniteGroup(std::move(t), "Q8");
}

// Permutations of {0..n-1} in lexicographic order; product pq acts as
// (pq)(x) = p(q(x)). Guarded at n <= 4 (Cayley tables only, desk scale).
inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4) {
    throw TooLarge("symmetric group supported for 1 <= n <= 4");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) {
    index[perms[i]] = i;
  }
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) {
        comp[x] = perms[a][perms[b][x]];
      }
      t[a][b] = index[comp];
    }
  }
  return FiniteGroup(std::move(t), "S" + std::to_string(n));
}

// Pairs (g, h) encoded as g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.order() * h.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto enc = [&](int a, int b) { return a * h.order() + b; };
  for (int a1 = 0; a1 < g.order(); ++a1) {
    for (int b1 = 0; b1 < h.order(); ++b1) {
      for (int a2 = 0; a2 < g.order(); ++a2) {
        for (int b2 = 0; b2 < h.order(); ++b2) {
          t[enc(a1, b1)][enc(a2, b2)] = enc(g.mul(a1, a2), h.mul(b1, b2));
        }
      }
    }
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) {
    name = g.name() + "x" + h.name();
  }
  return FiniteGroup(std::move(t), std::move(name));
}

// ---- normal subgroups ------------------------------------------------------

// Sorted member list; always contains the identity of the owning group.
struct NormalSubgroup {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int a) const {
    return std::binary_search(members.begin(), members.end(), a);
  }
  friend bool operator==(const NormalSubgroup&, const NormalSubgroup&) = default;
  friend bool operator<(const NormalSubgroup& a, const NormalSubgroup& b) {
    return a.members < b.members;
  }
};

inline bool is_normal_subgroup(const FiniteGroup& g, const NormalSubgroup& n) {
  if (!n.contains(g.identity())) {
    return false;
  }
  for (int a : n.members) {
    if (a < 0 || a >= g.order() || !n.contains(g.inverse(a))) {
      return false;
    }
    for (int b : n.members) {
      if (!n.contains(g.mul(a, b))) {
        return false;
      }
    }
    for (int x = 0; x < g.order(); ++x) {
      if (!n.contains(g.conjugate(x, a))) {
        return false;
      }
    }
  }
  return true;
}

// Least normal subgroup containing the seed: worklist closure under
// products, inverses and conjugation.
inline NormalSubgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members;
  std::vector<int> todo;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      todo.push_back(x);
    }
  };
  add(g.identity());
  for (int x : seed) {
    if (x < 0 || x >= g.order()) {
      throw OutOfRange("seed element " + std::to_string(x) + " out of range");
    }
    add(x);
  }
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    add(g.inverse(x));
    for (int t = 0; t < g.order(); ++t) {
      add(g.conjugate(t, x));
    }
    // products with everything already in; members may grow during the loop
    for (std::size_t k = 0; k < members.size(); ++k) {
      add(g.mul(x, members[k]));
      add(g.mul(members[k], x));
    }
  }
  std::sort(members.begin(), members.end());
  return NormalSubgroup{std::move(members)};
}

// All normal subgroups: join-closure of the principal normal closures.
// Sorted by (size, members).
inline std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& g,
                                                    int guard = kMaxLatticeOrder) {
  if (g.order() > guard) {
    throw TooLarge("normal subgroup enumeration refused for order "
                   + std::to_string(g.order()));
  }
  std::set<NormalSubgroup> found;
  found.insert(normal_closure(g, {}));
  std::vector<NormalSubgroup> frontier;
  for (int a = 0; a < g.order(); ++a) {
    auto n = normal_closure(g, {a});
    if (found.insert(n).second) {
      frontier.push_back(n);
    }
  }
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    std::vector<NormalSubgroup> snapshot(found.begin(), found.end());
    for (const auto& other : snapshot) {
      auto seed = cur.members;
      seed.insert(seed.end(), other.members.begin(), other.members.end());
      auto j = normal_closure(g, seed);
      if (found.insert(j).second) {
        frontier.push_back(j);
      }
    }
  }
  std::vector<NormalSubgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.members < b.members;
  });
  return out;
}

// a ~ b iff a b^-1 in N (blocks are the right cosets of N).
inline Partition congruence_of_normal(const FiniteGroup& g, const NormalSubgroup& n) {
  if (!is_normal_subgroup(g, n)) {
    throw NotNormal("congruence_of_normal requires a normal subgroup");
  }
  std::vector<int> raw(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int rep = -1;
    for (int b = 0; b <= a; ++b) {
      if (n.contains(g.mul(a, g.inverse(b)))) {
        rep = b;
        break;
      }
    }
    raw[a] = rep;
  }
  return Partition::from_block_ids(std::move(raw));
}

inline NormalSubgroup normal_of_congruence(const FiniteGroup& g, const Partition& theta) {
  if (theta.size() != g.order()) {
    throw MalformedTable("congruence carrier size does not match the group");
  }
  if (!is_congruence(g.base(), theta).ok) {
    throw NotACongruence("normal_of_congruence requires a congruence");
  }
  std::vector<int> members;
  int e = g.identity();
  for (int a = 0; a < g.order(); ++a) {
    if (theta.related(a, e)) {
      members.push_back(a);
    }
  }
  return NormalSubgroup{std::move(members)};
}

// Normal closure of all commutators m^-1 n^-1 m n; the congruence
// commutator transported to normal subgroups.
inline NormalSubgroup group_commutator(const FiniteGroup& g, const NormalSubgroup& m,
                                       const NormalSubgroup& n) {
  if (!is_normal_subgroup(g, m) || !is_normal_subgroup(g, n)) {
    throw NotNormal("group_commutator requires normal subgroups");
  }
  std::vector<int> seed;
  for (int a : m.members) {
    for (int b : n.members) {
      seed.push_back(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
    }
  }
  return normal_closure(g, seed);
}

inline NormalSubgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return NormalSubgroup{std::move(all)};
}

inline NormalSubgroup trivial_subgroup(const FiniteGroup& g) {
  return NormalSubgroup{{g.identity()}};
}

// Least n with the lower central series G >= [G,G] >= [G,[G,G]] >= ...
// reaching {e}; absent when it stabilizes above {e}.
inline std::optional<int> group_nilpotency_degree(const FiniteGroup& g) {
  auto full = full_subgroup(g);
  auto cur = group_commutator(g, full, full);
  int k = 1;
  while (true) {
    if (cur.size() == 1) {
      return k;
    }
    auto next = group_commutator(g, full, cur);
    if (next == cur) {
      return std::nullopt;
    }
    cur = std::move(next);
    ++k;
  }
}

// Least n with the derived series reaching {e}.
inline std::optional<int> group_solvability_degree(const FiniteGroup& g) {
  auto full = full_subgroup(g);
  auto cur = group_commutator(g, full, full);
  int k = 1;
  while (true) {
    if (cur.size() == 1) {
      return k;
    }
    auto next = group_commutator(g, cur, cur);
    if (next == cur) {
      return std::nullopt;
    }
    cur = std::move(next);
    ++k;
  }
}

}  // namespace semicomm
