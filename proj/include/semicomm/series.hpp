#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semicomm/commutator.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/rees.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

enum class SeriesKind { lower_central, derived };
enum class SeriesMethod { automatic, fast, oracle };

// Trace of a commutator series. Entries are weakly decreasing; the trace
// ends at the identity relation (degree = length) or at the first repeated
// entry (stabilized above 0_S, degree absent).
struct SeriesTrace {
  SeriesKind kind = SeriesKind::lower_central;
  std::vector<Partition> entries;
  bool stabilized = false;
  std::optional<int> degree;
};

namespace detail {

template <typename Comm>
SeriesTrace run_series(int order, SeriesKind kind, Comm&& comm, int max_steps) {
  SeriesTrace trace;
  trace.kind = kind;
  Partition full = Partition::full(order);
  Partition cur = comm(full, full);
  trace.entries.push_back(cur);
  int k = 1;
  while (true) {
    if (cur.is_singletons()) {
      trace.degree = k;
      return trace;
    }
    if (k >= max_steps) {
      return trace;  // neither terminated nor provably stabilized
    }
    Partition next = kind == SeriesKind::lower_central ? comm(full, cur) : comm(cur, cur);
    trace.entries.push_back(next);
    ++k;
    if (next == cur) {
      trace.stabilized = true;
      return trace;
    }
    cur = std::move(next);
  }
}

}  // namespace detail

inline SeriesTrace commutator_series(const ReesMatrixSemigroup& rs, SeriesKind kind,
                                     SeriesMethod method = SeriesMethod::automatic,
                                     int oracle_guard = kMaxOracleOrder,
                                     int max_steps = 0) {
  if (max_steps <= 0) {
    max_steps = rs.order() + 1;  // strictly descending chains are shorter than this
  }
  auto comm = [&](const Partition& a, const Partition& b) {
    if (method == SeriesMethod::oracle) {
      return commutator_bruteforce(rs.flattened(), a, b, oracle_guard);
    }
    return commutator_fast(rs, a, b);
  };
  return detail::run_series(rs.order(), kind, comm, max_steps);
}

inline SeriesTrace commutator_series(const FiniteSemigroup& s, SeriesKind kind,
                                     SeriesMethod method = SeriesMethod::automatic,
                                     int oracle_guard = kMaxOracleOrder,
                                     int max_steps = 0) {
  if (max_steps <= 0) {
    max_steps = s.order() + 1;
  }
  CommutatorMethod m = CommutatorMethod::automatic;
  if (method == SeriesMethod::fast) {
    m = CommutatorMethod::fast;
  } else if (method == SeriesMethod::oracle) {
    m = CommutatorMethod::oracle;
  }
  auto comm = [&](const Partition& a, const Partition& b) {
    return commutator(s, a, b, m, oracle_guard);
  };
  return detail::run_series(s.order(), kind, comm, max_steps);
}

inline SeriesTrace lower_central_series(const ReesMatrixSemigroup& rs,
                                        SeriesMethod method = SeriesMethod::automatic,
                                        int oracle_guard = kMaxOracleOrder) {
  return commutator_series(rs, SeriesKind::lower_central, method, oracle_guard);
}

inline SeriesTrace lower_central_series(const FiniteSemigroup& s,
                                        SeriesMethod method = SeriesMethod::automatic,
                                        int oracle_guard = kMaxOracleOrder) {
  return commutator_series(s, SeriesKind::lower_central, method, oracle_guard);
}

inline SeriesTrace derived_series(const ReesMatrixSemigroup& rs,
                                  SeriesMethod method = SeriesMethod::automatic,
                                  int oracle_guard = kMaxOracleOrder) {
  return commutator_series(rs, SeriesKind::derived, method, oracle_guard);
}

inline SeriesTrace derived_series(const FiniteSemigroup& s,
                                  SeriesMethod method = SeriesMethod::automatic,
                                  int oracle_guard = kMaxOracleOrder) {
  return commutator_series(s, SeriesKind::derived, method, oracle_guard);
}

template <typename Algebra>
std::optional<int> nilpotency_degree(const Algebra& x,
                                     SeriesMethod method = SeriesMethod::automatic,
                                     int oracle_guard = kMaxOracleOrder) {
  return commutator_series(x, SeriesKind::lower_central, method, oracle_guard).degree;
}

template <typename Algebra>
std::optional<int> solvability_degree(const Algebra& x,
                                      SeriesMethod method = SeriesMethod::automatic,
                                      int oracle_guard = kMaxOracleOrder) {
  return commutator_series(x, SeriesKind::derived, method, oracle_guard).degree;
}

// ---- projection identity: semigroup series vs group-side series --------------

struct SeriesProjection {
  Partition left;   // G-part of the semigroup series entry k
  Partition right;  // group-side series seeded with [1_G,1_G] v Theta_{1,1}
  bool equal = false;
};

// Both sides computed independently: the left through the semigroup series
// and triple extraction, the right purely group-side.
inline SeriesProjection series_projection(const ReesMatrixSemigroup& rs, int k,
                                          SeriesKind kind) {
  if (k < 2) {
    throw MalformedTable("series projection requires k >= 2");
  }
  // left: entry k of the semigroup series, extracted to its G-part
  auto trace = commutator_series(rs, kind, SeriesMethod::fast, kMaxOracleOrder, k);
  Partition entry;
  if (trace.entries.size() >= static_cast<std::size_t>(k)) {
    entry = trace.entries[k - 1];
  } else if (trace.degree) {
    entry = Partition::singletons(rs.order());  // the series stays at 0_S
  } else {
    entry = trace.entries.back();  // stabilized early, constant from there on
  }
  Partition left = triple_of_congruence(rs, entry).rho_g;

  // right: k-1 ladder steps on the group side, seeded with [1_G,1_G] v Theta_{1,1}
  const FiniteGroup& g = rs.group();
  Partition one = Partition::full(rs.order());
  auto theta = normal_of_congruence(g, theta_congruence(rs, one, one));
  auto full = full_subgroup(g);
  auto comm_full = group_commutator(g, full, full);
  auto seed_members = comm_full.members;
  seed_members.insert(seed_members.end(), theta.members.begin(), theta.members.end());
  NormalSubgroup cur = normal_closure(g, seed_members);
  for (int step = 0; step < k - 1; ++step) {
    cur = kind == SeriesKind::lower_central ? group_commutator(g, full, cur)
                                            : group_commutator(g, cur, cur);
  }
  Partition right = congruence_of_normal(g, cur);
  bool equal = left == right;
  return {std::move(left), std::move(right), equal};
}

// ---- the regular-semigroup decision procedure --------------------------------

enum class RegularVerdict { not_simple, h_class_not_group, group_degree_fails, yes };

struct RegularCheck {
  RegularVerdict verdict = RegularVerdict::not_simple;
  std::optional<int> witness;           // ideal generator or bad H-class element
  int max_subgroup_order = 0;
  std::optional<int> group_degree;      // degree of the maximal subgroup
  std::optional<int> semigroup_degree;  // exact, when computed
  std::optional<std::pair<int, int>> degree_bounds;  // [deg_G, deg_G + 1]
};

namespace detail {

// Literal check that a Green's H-block is a group: closed under the product,
// has an identity, and every member has an inverse against it.
inline bool h_block_is_group(const FiniteSemigroup& s, const std::vector<int>& block) {
  std::vector<char> in(s.order(), 0);
  for (int x : block) {
    in[x] = 1;
  }
  for (int x : block) {
    for (int y : block) {
      if (!in[s.mul(x, y)]) {
        return false;
      }
    }
  }
  int e = -1;
  for (int cand : block) {
    bool ok = true;
    for (int x : block) {
      if (s.mul(cand, x) != x || s.mul(x, cand) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == -1) {
    return false;
  }
  for (int x : block) {
    bool has_inverse = false;
    for (int y : block) {
      if (s.mul(x, y) == e && s.mul(y, x) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline constexpr int kMaxExactDegreeOrder = 1024;

// Decision procedure for nilpotency/solvability of a finite regular
// semigroup: it must be simple with group H-classes, and then the verdict is
// the maximal subgroup's, with degree bounds deg_G <= deg_S <= deg_G + 1.
inline RegularCheck regular_nilpotency_check(const FiniteSemigroup& s, SeriesKind kind) {
  auto reg = is_regular(s);
  if (!reg.regular) {
    throw SemicommError("regular_nilpotency_check requires a regular semigroup (witness "
                        + std::to_string(*reg.witness) + ")");
  }
  RegularCheck out;
  auto simple = is_simple(s);
  if (!simple.simple) {
    out.verdict = RegularVerdict::not_simple;
    out.witness = simple.witness;
    return out;
  }
  auto greens = greens_relations(s);
  for (const auto& block : greens.h.blocks()) {
    if (!detail::h_block_is_group(s, block)) {
      out.verdict = RegularVerdict::h_class_not_group;
      out.witness = block.front();
      return out;
    }
  }
  auto dec = rees_decompose(s);
  const FiniteGroup& g = dec.rs.group();
  out.max_subgroup_order = g.order();
  out.group_degree = kind == SeriesKind::lower_central ? group_nilpotency_degree(g)
                                                       : group_solvability_degree(g);
  if (!out.group_degree) {
    out.verdict = RegularVerdict::group_degree_fails;
    return out;
  }
  out.verdict = RegularVerdict::yes;
  out.degree_bounds = std::make_pair(*out.group_degree, *out.group_degree + 1);
  if (s.order() <= kMaxExactDegreeOrder) {
    out.semigroup_degree = commutator_series(dec.rs, kind, SeriesMethod::fast).degree;
  }
  return out;
}

}  // namespace semicomm
