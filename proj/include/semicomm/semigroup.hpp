#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/errors.hpp"
#include "semicomm/partition.hpp"

namespace semicomm {

inline constexpr int kMaxConstructionOrder = 4096;

// Finite semigroup on {0..n-1} with a dense Cayley table. Immutable after
// construction; associativity is verified exhaustively (O(n^3)).
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::vector<int>> table, std::string name = "")
      : name_(std::move(name)) {
    order_ = static_cast<int>(table.size());
    if (order_ == 0) {
      throw MalformedTable("carrier must be nonempty");
    }
    if (order_ > kMaxConstructionOrder) {
      throw TooLarge("order " + std::to_string(order_) + " exceeds construction cap "
                     + std::to_string(kMaxConstructionOrder));
    }
    table_.reserve(static_cast<std::size_t>(order_) * order_);
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != order_) {
        throw MalformedTable("table is not square");
      }
      for (int v : row) {
        if (v < 0 || v >= order_) {
          throw MalformedTable("table entry " + std::to_string(v) + " out of range");
        }
        table_.push_back(v);
      }
    }
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw NotAssociative(a, b, c);
          }
        }
      }
    }
  }

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int mul(int a, int b, int c) const { return mul(mul(a, b), c); }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        out[a][b] = mul(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::string name_;
};

inline FiniteSemigroup make_semigroup(std::vector<std::vector<int>> table,
                                      std::string name = "") {
  return FiniteSemigroup(std::move(table), std::move(name));
}

// Total unary map on the carrier.
struct UnaryOp {
  int carrier_size = 0;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }

  void validate() const {
    if (static_cast<int>(map.size()) != carrier_size) {
      throw MalformedTable("unary map has wrong size");
    }
    for (int v : map) {
      if (v < 0 || v >= carrier_size) {
        throw OutOfRange("unary map value out of range");
      }
    }
  }
};

struct RegularityCheck {
  bool regular = false;
  std::optional<int> witness;  // element a with axa != a for all x

  explicit operator bool() const { return regular; }
};

inline RegularityCheck is_regular(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    bool found = false;
    for (int x = 0; x < s.order(); ++x) {
      if (s.mul(a, x, a) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      return {false, a};
    }
  }
  return {true, std::nullopt};
}

inline std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    if (s.mul(a, a) == a) {
      out.push_back(a);
    }
  }
  return out;
}

inline bool is_primitive_idempotent(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.order()) {
    throw OutOfRange("element " + std::to_string(e) + " out of range");
  }
  if (s.mul(e, e) != e) {
    throw NotIdempotent("element " + std::to_string(e) + " is not idempotent");
  }
  for (int f = 0; f < s.order(); ++f) {
    if (f != e && s.mul(f, f) == f && s.mul(e, f) == f && s.mul(f, e) == f) {
      return false;
    }
  }
  return true;
}

namespace detail {

// Principal two-sided ideal S^1 a S^1, as a membership vector.
inline std::vector<char> principal_ideal(const FiniteSemigroup& s, int a) {
  std::vector<char> in(s.order(), 0);
  std::vector<int> stack{a};
  in[a] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int t = 0; t < s.order(); ++t) {
      for (int y : {s.mul(t, x), s.mul(x, t)}) {
        if (!in[y]) {
          in[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return in;
}

}  // namespace detail

struct SimplicityCheck {
  bool simple = false;
  std::optional<int> witness;  // element generating a proper ideal

  explicit operator bool() const { return simple; }
};

inline SimplicityCheck is_simple(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    auto ideal = detail::principal_ideal(s, a);
    for (char c : ideal) {
      if (!c) {
        return {false, a};
      }
    }
  }
  return {true, std::nullopt};
}

inline bool is_completely_simple(const FiniteSemigroup& s) {
  if (!is_simple(s).simple) {
    return false;
  }
  for (int e : idempotents(s)) {
    if (is_primitive_idempotent(s, e)) {
      return true;
    }
  }
  return false;
}

struct GreensRelations {
  Partition r;
  Partition l;
  Partition h;  // r meet l
};

// Green's R, L, H from principal one-sided ideals (S^1 handled by seeding
// the element itself). These are plain partitions; they are congruences
// only in special cases.
inline GreensRelations greens_relations(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<std::vector<char>> right(n), left(n);
  for (int a = 0; a < n; ++a) {
    right[a].assign(n, 0);
    left[a].assign(n, 0);
    right[a][a] = 1;
    left[a][a] = 1;
    for (int x = 0; x < n; ++x) {
      right[a][s.mul(a, x)] = 1;
      left[a][s.mul(x, a)] = 1;
    }
  }
  auto group_by = [n](const std::vector<std::vector<char>>& sets) {
    std::map<std::vector<char>, int> seen;
    std::vector<int> raw(n);
    for (int a = 0; a < n; ++a) {
      auto [it, fresh] = seen.try_emplace(sets[a], static_cast<int>(seen.size()));
      raw[a] = it->second;
      (void) fresh;
    }
    return Partition::from_block_ids(std::move(raw));
  };
  GreensRelations g;
  g.r = group_by(right);
  g.l = group_by(left);
  g.h = g.r.meet(g.l);
  return g;
}

// Maps each element to its inverse in its maximal subgroup. Requires a
// completely simple semigroup (every H-class is a group).
inline UnaryOp inversion_map(const FiniteSemigroup& s) {
  if (!is_completely_simple(s)) {
    throw NotCompletelySimple("inversion map needs a completely simple semigroup");
  }
  auto h = greens_relations(s).h;
  UnaryOp inv{s.order(), std::vector<int>(s.order(), -1)};
  auto blocks = h.blocks();
  for (int a = 0; a < s.order(); ++a) {
    int found = -1;
    for (int x : blocks[h.block_of(a)]) {
      if (s.mul(a, x, a) == a && s.mul(x, a, x) == x && s.mul(a, x) == s.mul(x, a)) {
        if (found != -1) {
          throw NoUniqueInverse("two inverses for element " + std::to_string(a));
        }
        found = x;
      }
    }
    if (found == -1) {
      throw NoUniqueInverse("no inverse for element " + std::to_string(a));
    }
    inv.map[a] = found;
  }
  return inv;
}

struct UnaryCompatibilityCheck {
  bool compatible = false;
  // (index into the congruence list, a, b): a ~ b but u(a) !~ u(b).
  std::optional<std::array<int, 3>> witness;

  explicit operator bool() const { return compatible; }
};

inline UnaryCompatibilityCheck unary_preserves_congruences(const FiniteSemigroup& s,
                                                           const UnaryOp& u,
                                                           const std::vector<Partition>& congruences) {
  if (u.carrier_size != s.order()) {
    throw MalformedTable("unary map size does not match the semigroup");
  }
  u.validate();
  for (int k = 0; k < static_cast<int>(congruences.size()); ++k) {
    const Partition& theta = congruences[k];
    if (theta.size() != s.order()) {
      throw MalformedTable("congruence " + std::to_string(k) + " has wrong carrier size");
    }
    for (auto [a, b] : theta.spanning_pairs()) {
      if (!theta.related(u(a), u(b))) {
        return {false, std::array<int, 3>{k, a, b}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace semicomm
