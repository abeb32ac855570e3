#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/group.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

namespace detail {

// Cayley table of I x G x Lambda under (i,g,l)(j,h,m) = (i, g p_{l j} h, m),
// with code(i,g,l) = (i*|G| + g)*Lambda + l. Works for any sandwich matrix.
inline std::vector<std::vector<int>> rees_table(const FiniteGroup& g, int i_size,
                                                int lambda_size,
                                                const std::vector<std::vector<int>>& p) {
  int ng = g.order();
  int n = i_size * ng * lambda_size;
  auto code = [&](int i, int x, int l) { return (i * ng + x) * lambda_size + l; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < i_size; ++i) {
    for (int gx = 0; gx < ng; ++gx) {
      for (int l = 0; l < lambda_size; ++l) {
        int a = code(i, gx, l);
        for (int j = 0; j < i_size; ++j) {
          int mid = g.mul(gx, p[l][j]);
          for (int hx = 0; hx < ng; ++hx) {
            int prod = g.mul(mid, hx);
            for (int m = 0; m < lambda_size; ++m) {
              t[a][code(j, hx, m)] = code(i, prod, m);
            }
          }
        }
      }
    }
  }
  return t;
}

inline void check_sandwich_shape(const FiniteGroup& g, int i_size, int lambda_size,
                                 const std::vector<std::vector<int>>& p) {
  if (i_size < 1 || lambda_size < 1) {
    throw MalformedTable("index sets must be nonempty");
  }
  if (static_cast<int>(p.size()) != lambda_size) {
    throw MalformedTable("sandwich matrix must have Lambda rows");
  }
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != i_size) {
      throw MalformedTable("sandwich matrix must have I columns");
    }
    for (int v : row) {
      if (v < 0 || v >= g.order()) {
        throw OutOfRange("sandwich entry " + std::to_string(v) + " out of range");
      }
    }
  }
}

}  // namespace detail

struct ReesElement {
  int i = 0;
  int g = 0;
  int lambda = 0;

  friend bool operator==(const ReesElement&, const ReesElement&) = default;
};

// Normalized Rees matrix semigroup M[G; I, Lambda; P]. The flattened Cayley
// table is materialized eagerly and checked completely simple.
class ReesMatrixSemigroup {
 public:
  ReesMatrixSemigroup(FiniteGroup group, int i_size, int lambda_size,
                      std::vector<std::vector<int>> p)
      : group_(std::move(group)),
        i_size_(i_size),
        lambda_size_(lambda_size),
        p_(std::move(p)),
        flat_(detail::rees_table(group_, i_size_, lambda_size_, validated(group_, i_size_, lambda_size_, p_))) {
    if (!is_completely_simple(flat_)) {
      throw NotCompletelySimple("flattened Rees table is not completely simple");
    }
  }

  const FiniteGroup& group() const { return group_; }
  int i_size() const { return i_size_; }
  int lambda_size() const { return lambda_size_; }
  int order() const { return flat_.order(); }
  const FiniteSemigroup& flattened() const { return flat_; }
  const std::vector<std::vector<int>>& sandwich() const { return p_; }

  int p(int lambda, int i) const { return p_[lambda][i]; }

  int encode(int i, int g, int lambda) const {
    if (i < 0 || i >= i_size_ || g < 0 || g >= group_.order() || lambda < 0
        || lambda >= lambda_size_) {
      throw OutOfRange("Rees coordinates out of range");
    }
    return (i * group_.order() + g) * lambda_size_ + lambda;
  }

  ReesElement decode(int x) const {
    if (x < 0 || x >= order()) {
      throw OutOfRange("element " + std::to_string(x) + " out of range");
    }
    ReesElement e;
    e.lambda = x % lambda_size_;
    x /= lambda_size_;
    e.g = x % group_.order();
    e.i = x / group_.order();
    return e;
  }

 private:
  static const std::vector<std::vector<int>>& validated(const FiniteGroup& g, int i_size,
                                                        int lambda_size,
                                                        const std::vector<std::vector<int>>& p) {
    detail::check_sandwich_shape(g, i_size, lambda_size, p);
    for (int i = 0; i < i_size; ++i) {
      if (p[0][i] != g.identity()) {
        throw NotNormalized(0, i);
      }
    }
    for (int l = 0; l < lambda_size; ++l) {
      if (p[l][0] != g.identity()) {
        throw NotNormalized(l, 0);
      }
    }
    return p;
  }

  FiniteGroup group_;
  int i_size_;
  int lambda_size_;
  std::vector<std::vector<int>> p_;
  FiniteSemigroup flat_;
};

inline ReesMatrixSemigroup build_rees(FiniteGroup group, int i_size, int lambda_size,
                                      std::vector<std::vector<int>> p) {
  return ReesMatrixSemigroup(std::move(group), i_size, lambda_size, std::move(p));
}

// True iff map is a bijective homomorphism from a to b (checked exhaustively).
inline bool is_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                           const std::vector<int>& map) {
  if (a.order() != b.order() || static_cast<int>(map.size()) != a.order()) {
    return false;
  }
  std::vector<char> hit(b.order(), 0);
  for (int v : map) {
    if (v < 0 || v >= b.order() || hit[v]) {
      return false;
    }
    hit[v] = 1;
  }
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < a.order(); ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

struct SandwichNormalization {
  std::vector<std::vector<int>> p;  // normalized
  std::vector<int> carrier_map;     // flat element of M[P_raw] -> flat element of M[P]
};

// p'_{l i} = p_{l 0}^-1 p_{l i} p_{0 i}^-1 p_{0 0}, with the carrier map
// (i,g,l) -> (i, p_{0 0}^-1 p_{0 i} g p_{l 0}, l). The map is verified to be
// an isomorphism of the two flattened tables.
inline SandwichNormalization normalize_sandwich(const FiniteGroup& g, int i_size,
                                                int lambda_size,
                                                const std::vector<std::vector<int>>& p_raw) {
  detail::check_sandwich_shape(g, i_size, lambda_size, p_raw);
  int ng = g.order();
  std::vector<std::vector<int>> p(lambda_size, std::vector<int>(i_size));
  for (int l = 0; l < lambda_size; ++l) {
    for (int i = 0; i < i_size; ++i) {
      p[l][i] = g.mul(g.mul(g.inverse(p_raw[l][0]), p_raw[l][i]),
                      g.mul(g.inverse(p_raw[0][i]), p_raw[0][0]));
    }
  }
  auto code = [&](int i, int x, int l) { return (i * ng + x) * lambda_size + l; };
  std::vector<int> carrier(i_size * ng * lambda_size);
  for (int i = 0; i < i_size; ++i) {
    int left = g.mul(g.inverse(p_raw[0][0]), p_raw[0][i]);
    for (int x = 0; x < ng; ++x) {
      for (int l = 0; l < lambda_size; ++l) {
        carrier[code(i, x, l)] = code(i, g.mul(g.mul(left, x), p_raw[l][0]), l);
      }
    }
  }
  FiniteSemigroup raw_flat(detail::rees_table(g, i_size, lambda_size, p_raw));
  FiniteSemigroup norm_flat(detail::rees_table(g, i_size, lambda_size, p));
  if (!is_isomorphism(raw_flat, norm_flat, carrier)) {
    throw SemicommError("internal: normalization carrier map is not an isomorphism");
  }
  return {std::move(p), std::move(carrier)};
}

struct ReesDecomposition {
  ReesMatrixSemigroup rs;
  std::vector<int> iso;  // flat element of rs -> element of the input semigroup
};

// Rees coordinates for an abstract completely simple semigroup: base point is
// the minimal idempotent, I and Lambda are the R- and L-classes, the group is
// the base H-class, and the sandwich matrix comes from class representatives
// (then gets normalized).
inline ReesDecomposition rees_decompose(const FiniteSemigroup& s) {
  if (!is_completely_simple(s)) {
    throw NotCompletelySimple("rees_decompose requires a completely simple semigroup");
  }
  auto greens = greens_relations(s);
  auto idems = idempotents(s);
  int e0 = *std::min_element(idems.begin(), idems.end());

  // group = H-class of e0, relabelled with e0 first
  std::vector<int> h_members;
  for (int x = 0; x < s.order(); ++x) {
    if (greens.h.related(x, e0)) {
      h_members.push_back(x);
    }
  }
  std::vector<int> s_of_g;
  s_of_g.push_back(e0);
  for (int x : h_members) {
    if (x != e0) {
      s_of_g.push_back(x);
    }
  }
  std::vector<int> g_of_s(s.order(), -1);
  for (int k = 0; k < static_cast<int>(s_of_g.size()); ++k) {
    g_of_s[s_of_g[k]] = k;
  }
  int ng = static_cast<int>(s_of_g.size());
  std::vector<std::vector<int>> gtable(ng, std::vector<int>(ng));
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < ng; ++b) {
      int prod = s.mul(s_of_g[a], s_of_g[b]);
      if (g_of_s[prod] == -1) {
        throw SemicommError("internal: base H-class is not closed under the product");
      }
      gtable[a][b] = g_of_s[prod];
    }
  }
  FiniteGroup group(std::move(gtable));

  // index the R- and L-classes with the classes of e0 first
  auto index_classes = [e0](const Partition& part) {
    std::vector<int> order_of_block(part.num_blocks(), -1);
    order_of_block[part.block_of(e0)] = 0;
    int next = 1;
    for (int x = 0; x < part.size(); ++x) {
      int b = part.block_of(x);
      if (order_of_block[b] == -1) {
        order_of_block[b] = next++;
      }
    }
    return order_of_block;
  };
  auto r_index = index_classes(greens.r);
  auto l_index = index_classes(greens.l);
  int i_size = greens.r.num_blocks();
  int lambda_size = greens.l.num_blocks();

  // representatives r_i in R_i meet L_{e0} and q_l in L_l meet R_{e0}
  std::vector<int> rep_r(i_size, -1), rep_q(lambda_size, -1);
  rep_r[0] = e0;
  rep_q[0] = e0;
  for (int x = 0; x < s.order(); ++x) {
    int i = r_index[greens.r.block_of(x)];
    int l = l_index[greens.l.block_of(x)];
    if (l == 0 && rep_r[i] == -1) {
      rep_r[i] = x;
    }
    if (i == 0 && rep_q[l] == -1) {
      rep_q[l] = x;
    }
  }

  std::vector<std::vector<int>> p_raw(lambda_size, std::vector<int>(i_size));
  for (int l = 0; l < lambda_size; ++l) {
    for (int i = 0; i < i_size; ++i) {
      int prod = s.mul(rep_q[l], rep_r[i]);
      if (g_of_s[prod] == -1) {
        throw SemicommError("internal: sandwich entry left the base H-class");
      }
      p_raw[l][i] = g_of_s[prod];
    }
  }

  // raw coordinates (i,g,l) -> r_i g q_l, then reroute through normalization
  auto code = [&](int i, int x, int l) { return (i * ng + x) * lambda_size + l; };
  std::vector<int> phi(s.order());
  for (int i = 0; i < i_size; ++i) {
    for (int x = 0; x < ng; ++x) {
      for (int l = 0; l < lambda_size; ++l) {
        phi[code(i, x, l)] = s.mul(s.mul(rep_r[i], s_of_g[x]), rep_q[l]);
      }
    }
  }
  auto norm = normalize_sandwich(group, i_size, lambda_size, p_raw);
  std::vector<int> iso(s.order());
  for (int x = 0; x < s.order(); ++x) {
    iso[norm.carrier_map[x]] = phi[x];
  }

  ReesDecomposition out{ReesMatrixSemigroup(std::move(group), i_size, lambda_size,
                                            std::move(norm.p)),
                        std::move(iso)};
  if (!is_isomorphism(out.rs.flattened(), s, out.iso)) {
    throw SemicommError("internal: decomposition map is not an isomorphism");
  }
  return out;
}

}  // namespace semicomm
