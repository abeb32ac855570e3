#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/group.hpp"
#include "semicomm/linked_triple.hpp"
#include "semicomm/rees.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

inline constexpr int kMaxOracleOrder = 64;
inline constexpr int kMaxOracleOrderOverride = 128;

// ---- centralizing-condition checkers ----------------------------------------

enum class CentralizerCondition { c1, c2, c3, c31, c32, c33 };

inline std::string to_string(CentralizerCondition c) {
  switch (c) {
    case CentralizerCondition::c1: return "C1";
    case CentralizerCondition::c2: return "C2";
    case CentralizerCondition::c3: return "C3";
    case CentralizerCondition::c31: return "C3.1";
    case CentralizerCondition::c32: return "C3.2";
    case CentralizerCondition::c33: return "C3.3";
  }
  return "?";
}

// A falsified implication instance. For C1/C2 the context is the single pair
// (c1, d1); c2/d2 stay -1. For the split conditions a and b are indices into
// I, G or Lambda as appropriate.
struct CentralizerWitness {
  CentralizerCondition condition;
  int a = -1, b = -1;
  int c1 = -1, d1 = -1, c2 = -1, d2 = -1;
};

struct CentralizerReport {
  bool holds = false;
  std::optional<CentralizerWitness> witness;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline std::vector<std::pair<int, int>> related_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : p.blocks()) {
    for (int a : block) {
      for (int b : block) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

inline void check_congruence_arg(const FiniteSemigroup& s, const Partition& p,
                                 const char* role) {
  if (p.size() != s.order() || !is_congruence(s, p).ok) {
    throw NotACongruence(std::string(role) + " is not a congruence of the semigroup");
  }
}

// Fast existence scan for a C1 violation: for each beta-pair (c,d), the
// premise predicate x -> (xc delta xd) must be constant on alpha-blocks.
inline bool c1_violated(const FiniteSemigroup& s, const Partition& alpha,
                        const Partition& beta, const Partition& delta) {
  if (alpha.is_singletons() || delta.is_full()) {
    return false;
  }
  int n = s.order();
  std::vector<char> prem(n);
  for (auto [c, d] : related_pairs(beta)) {
    if (c >= d || delta.related(c, d)) {
      continue;  // (d,c) mirrors (c,d); delta-related pairs cannot violate
    }
    for (int x = 0; x < n; ++x) {
      prem[x] = delta.related(s.mul(x, c), s.mul(x, d));
    }
    for (const auto& block : alpha.blocks()) {
      bool seen_true = false, seen_false = false;
      for (int x : block) {
        (prem[x] ? seen_true : seen_false) = true;
        if (seen_true && seen_false) {
          return true;
        }
      }
    }
  }
  return false;
}

inline bool c2_violated(const FiniteSemigroup& s, const Partition& alpha,
                        const Partition& beta, const Partition& delta) {
  if (alpha.is_singletons() || delta.is_full()) {
    return false;
  }
  int n = s.order();
  std::vector<char> prem(n);
  for (auto [c, d] : related_pairs(beta)) {
    if (c >= d || delta.related(c, d)) {
      continue;
    }
    for (int x = 0; x < n; ++x) {
      prem[x] = delta.related(s.mul(c, x), s.mul(d, x));
    }
    for (const auto& block : alpha.blocks()) {
      bool seen_true = false, seen_false = false;
      for (int x : block) {
        (prem[x] ? seen_true : seen_false) = true;
        if (seen_true && seen_false) {
          return true;
        }
      }
    }
  }
  return false;
}

inline bool c3_violated(const FiniteSemigroup& s, const Partition& alpha,
                        const Partition& beta, const Partition& delta) {
  if (alpha.is_singletons() || delta.is_full()) {
    return false;
  }
  int n = s.order();
  auto bp = related_pairs(beta);
  auto blocks = alpha.blocks();
  std::vector<char> prem(n);
  for (auto [c1, d1] : bp) {
    if (c1 > d1) {
      continue;  // role swap (c1,d1,c2,d2) -> (d1,c1,d2,c2) is symmetric
    }
    bool left_trivial = delta.related(c1, d1);
    for (auto [c2, d2] : bp) {
      if (left_trivial && delta.related(c2, d2)) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        prem[x] = delta.related(s.mul(c1, x, c2), s.mul(d1, x, d2));
      }
      for (const auto& block : blocks) {
        bool seen_true = false, seen_false = false;
        for (int x : block) {
          (prem[x] ? seen_true : seen_false) = true;
          if (seen_true && seen_false) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

// Witness searches in the documented scan order (a, b, c1, d1, c2, d2).
// Only called when a violation is known to exist.
inline CentralizerWitness c1_witness(const FiniteSemigroup& s, const Partition& alpha,
                                     const Partition& beta, const Partition& delta) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) {
        continue;
      }
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (!beta.related(c, d)) {
            continue;
          }
          if (delta.related(s.mul(a, c), s.mul(a, d))
              && !delta.related(s.mul(b, c), s.mul(b, d))) {
            return {CentralizerCondition::c1, a, b, c, d, -1, -1};
          }
        }
      }
    }
  }
  throw SemicommError("internal: C1 witness vanished");
}

inline CentralizerWitness c2_witness(const FiniteSemigroup& s, const Partition& alpha,
                                     const Partition& beta, const Partition& delta) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) {
        continue;
      }
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (!beta.related(c, d)) {
            continue;
          }
          if (delta.related(s.mul(c, a), s.mul(d, a))
              && !delta.related(s.mul(c, b), s.mul(d, b))) {
            return {CentralizerCondition::c2, a, b, c, d, -1, -1};
          }
        }
      }
    }
  }
  throw SemicommError("internal: C2 witness vanished");
}

inline CentralizerWitness c3_witness(const FiniteSemigroup& s, const Partition& alpha,
                                     const Partition& beta, const Partition& delta) {
  int n = s.order();
  auto bp = related_pairs(beta);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) {
        continue;
      }
      for (auto [c1, d1] : bp) {
        for (auto [c2, d2] : bp) {
          if (delta.related(s.mul(c1, a, c2), s.mul(d1, a, d2))
              && !delta.related(s.mul(c1, b, c2), s.mul(d1, b, d2))) {
            return {CentralizerCondition::c3, a, b, c1, d1, c2, d2};
          }
        }
      }
    }
  }
  throw SemicommError("internal: C3 witness vanished");
}

}  // namespace detail

// Checks C(alpha, beta; delta) on an arbitrary finite semigroup through the
// three conditions C1, C2, C3. The first violated condition (scanned in that
// order) is reported with a lexicographically least witness.
inline CentralizerReport centralizes_general(const FiniteSemigroup& s, const Partition& alpha,
                                             const Partition& beta, const Partition& delta,
                                             int guard = kMaxOracleOrder) {
  if (s.order() > guard) {
    throw TooLarge("centralizer scan refused for order " + std::to_string(s.order())
                   + " (guard " + std::to_string(guard) + ")");
  }
  detail::check_congruence_arg(s, alpha, "alpha");
  detail::check_congruence_arg(s, beta, "beta");
  detail::check_congruence_arg(s, delta, "delta");
  if (detail::c1_violated(s, alpha, beta, delta)) {
    return {false, detail::c1_witness(s, alpha, beta, delta)};
  }
  if (detail::c2_violated(s, alpha, beta, delta)) {
    return {false, detail::c2_witness(s, alpha, beta, delta)};
  }
  if (detail::c3_violated(s, alpha, beta, delta)) {
    return {false, detail::c3_witness(s, alpha, beta, delta)};
  }
  return {true, std::nullopt};
}

enum class CsCheckerMode { c3_only, c3_split };

namespace detail {

// Violation scan for one split condition: mids[k] is the middle element for
// index k, and rho_part partitions the index range of the rho component.
inline std::optional<std::array<int, 6>> split_violation(const FiniteSemigroup& s,
                                                         const std::vector<int>& mids,
                                                         const Partition& rho_part,
                                                         const Partition& sigma,
                                                         const Partition& delta) {
  int m = static_cast<int>(mids.size());
  if (rho_part.is_singletons() || delta.is_full()) {
    return std::nullopt;
  }
  auto sp = related_pairs(sigma);
  auto blocks = rho_part.blocks();
  std::vector<char> prem(m);
  for (auto [c1, d1] : sp) {
    bool left_trivial = delta.related(c1, d1);
    for (auto [c2, d2] : sp) {
      if (left_trivial && delta.related(c2, d2)) {
        continue;
      }
      for (int k = 0; k < m; ++k) {
        prem[k] = delta.related(s.mul(c1, mids[k], c2), s.mul(d1, mids[k], d2));
      }
      for (const auto& block : blocks) {
        bool seen_true = false, seen_false = false;
        for (int k : block) {
          (prem[k] ? seen_true : seen_false) = true;
        }
        if (!(seen_true && seen_false)) {
          continue;
        }
        // lexicographic witness for this condition
        for (int k1 = 0; k1 < m; ++k1) {
          for (int k2 = 0; k2 < m; ++k2) {
            if (k1 == k2 || !rho_part.related(k1, k2)) {
              continue;
            }
            for (auto [e1, f1] : sp) {
              for (auto [e2, f2] : sp) {
                if (delta.related(s.mul(e1, mids[k1], e2), s.mul(f1, mids[k1], f2))
                    && !delta.related(s.mul(e1, mids[k2], e2), s.mul(f1, mids[k2], f2))) {
                  return std::array<int, 6>{k1, k2, e1, f1, e2, f2};
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Completely simple fast checkers: C3 alone, or the three restricted
// conditions C3.1-C3.3 that scan index pairs and group pairs instead of all
// element pairs.
inline CentralizerReport centralizes_cs(const ReesMatrixSemigroup& rs, const Partition& rho,
                                        const Partition& sigma, const Partition& delta,
                                        CsCheckerMode mode,
                                        int guard = kMaxOracleOrder) {
  const auto& s = rs.flattened();
  if (s.order() > guard) {
    throw TooLarge("centralizer scan refused for order " + std::to_string(s.order()));
  }
  detail::check_congruence_arg(s, rho, "rho");
  detail::check_congruence_arg(s, sigma, "sigma");
  detail::check_congruence_arg(s, delta, "delta");
  if (mode == CsCheckerMode::c3_only) {
    if (detail::c3_violated(s, rho, sigma, delta)) {
      return {false, detail::c3_witness(s, rho, sigma, delta)};
    }
    return {true, std::nullopt};
  }

  auto t = triple_of_congruence(rs, rho);
  const FiniteGroup& g = rs.group();
  int e = g.identity();

  std::vector<int> mids_i(rs.i_size());
  for (int i = 0; i < rs.i_size(); ++i) {
    mids_i[i] = rs.encode(i, e, 0);
  }
  if (auto w = detail::split_violation(s, mids_i, t.rho_i, sigma, delta)) {
    return {false, CentralizerWitness{CentralizerCondition::c31, (*w)[0], (*w)[1], (*w)[2],
                                      (*w)[3], (*w)[4], (*w)[5]}};
  }

  std::vector<int> mids_g(g.order());
  for (int f = 0; f < g.order(); ++f) {
    mids_g[f] = rs.encode(0, f, 0);
  }
  if (auto w = detail::split_violation(s, mids_g, t.rho_g, sigma, delta)) {
    return {false, CentralizerWitness{CentralizerCondition::c32, (*w)[0], (*w)[1], (*w)[2],
                                      (*w)[3], (*w)[4], (*w)[5]}};
  }

  std::vector<int> mids_l(rs.lambda_size());
  for (int l = 0; l < rs.lambda_size(); ++l) {
    mids_l[l] = rs.encode(0, e, l);
  }
  if (auto w = detail::split_violation(s, mids_l, t.rho_lambda, sigma, delta)) {
    return {false, CentralizerWitness{CentralizerCondition::c33, (*w)[0], (*w)[1], (*w)[2],
                                      (*w)[3], (*w)[4], (*w)[5]}};
  }
  return {true, std::nullopt};
}

// ---- the sandwich-matrix congruence and the fast commutator -----------------

namespace detail {

inline NormalSubgroup theta_subgroup(const ReesMatrixSemigroup& rs, const LinkedTriple& t_rho,
                                     const LinkedTriple& t_sigma) {
  const FiniteGroup& g = rs.group();
  std::vector<int> seed;
  auto harvest = [&](const Partition& on_i, const Partition& on_lambda) {
    for (const auto& iblock : on_i.blocks()) {
      for (int i : iblock) {
        for (int j : iblock) {
          if (i == j) {
            continue;
          }
          for (const auto& lblock : on_lambda.blocks()) {
            for (int l : lblock) {
              for (int m : lblock) {
                int x = g.mul(rs.p(m, i), g.inverse(rs.p(l, i)));
                int y = g.mul(rs.p(m, j), g.inverse(rs.p(l, j)));
                seed.push_back(g.mul(x, g.inverse(y)));
              }
            }
          }
        }
      }
    }
  };
  harvest(t_rho.rho_i, t_sigma.rho_lambda);
  harvest(t_sigma.rho_i, t_rho.rho_lambda);
  return normal_closure(g, seed);
}

}  // namespace detail

// The group congruence generated by all pairs
// (p_{mu i} p_{lambda i}^-1, p_{mu j} p_{lambda j}^-1) over index pairs
// related in rho_I x sigma_Lambda or sigma_I x rho_Lambda.
inline Partition theta_congruence(const ReesMatrixSemigroup& rs, const Partition& rho,
                                  const Partition& sigma) {
  auto t_rho = triple_of_congruence(rs, rho);
  auto t_sigma = triple_of_congruence(rs, sigma);
  return congruence_of_normal(rs.group(), detail::theta_subgroup(rs, t_rho, t_sigma));
}

// Commutator through the linked triple (0_I, [rho_G, sigma_G] v Theta, 0_Lambda).
inline Partition commutator_fast(const ReesMatrixSemigroup& rs, const Partition& rho,
                                 const Partition& sigma) {
  auto t_rho = triple_of_congruence(rs, rho);
  auto t_sigma = triple_of_congruence(rs, sigma);
  const FiniteGroup& g = rs.group();
  auto m = normal_of_congruence(g, t_rho.rho_g);
  auto n = normal_of_congruence(g, t_sigma.rho_g);
  auto comm = group_commutator(g, m, n);
  auto theta = detail::theta_subgroup(rs, t_rho, t_sigma);
  auto seed = comm.members;
  seed.insert(seed.end(), theta.members.begin(), theta.members.end());
  auto joined = normal_closure(g, seed);
  LinkedTriple t{Partition::singletons(rs.i_size()), congruence_of_normal(g, joined),
                 Partition::singletons(rs.lambda_size())};
  return congruence_of_triple(rs, t);
}

// ---- the brute-force least-fixpoint oracle -----------------------------------

namespace detail {

// One sweep of a condition: collect every conclusion pair whose premise
// holds in the current delta. Additions are batched, so the outcome does not
// depend on scan order.
inline void sweep_c1(const FiniteSemigroup& s, const std::vector<std::vector<int>>& alpha_blocks,
                     const std::vector<std::pair<int, int>>& beta_pairs, const Partition& delta,
                     std::vector<std::pair<int, int>>& forced) {
  if (alpha_blocks.size() == static_cast<std::size_t>(s.order()) || delta.is_full()) {
    return;
  }
  int n = s.order();
  std::vector<char> prem(n);
  for (auto [c, d] : beta_pairs) {
    if (c >= d || delta.related(c, d)) {
      continue;
    }
    for (int x = 0; x < n; ++x) {
      prem[x] = delta.related(s.mul(x, c), s.mul(x, d));
    }
    for (const auto& block : alpha_blocks) {
      bool any = false;
      for (int x : block) {
        if (prem[x]) {
          any = true;
          break;
        }
      }
      if (!any) {
        continue;
      }
      for (int b : block) {
        if (!prem[b]) {
          forced.emplace_back(s.mul(b, c), s.mul(b, d));
        }
      }
    }
  }
}

inline void sweep_c2(const FiniteSemigroup& s, const std::vector<std::vector<int>>& alpha_blocks,
                     const std::vector<std::pair<int, int>>& beta_pairs, const Partition& delta,
                     std::vector<std::pair<int, int>>& forced) {
  if (alpha_blocks.size() == static_cast<std::size_t>(s.order()) || delta.is_full()) {
    return;
  }
  int n = s.order();
  std::vector<char> prem(n);
  for (auto [c, d] : beta_pairs) {
    if (c >= d || delta.related(c, d)) {
      continue;
    }
    for (int x = 0; x < n; ++x) {
      prem[x] = delta.related(s.mul(c, x), s.mul(d, x));
    }
    for (const auto& block : alpha_blocks) {
      bool any = false;
      for (int x : block) {
        if (prem[x]) {
          any = true;
          break;
        }
      }
      if (!any) {
        continue;
      }
      for (int b : block) {
        if (!prem[b]) {
          forced.emplace_back(s.mul(c, b), s.mul(d, b));
        }
      }
    }
  }
}

inline void sweep_c3(const FiniteSemigroup& s, const std::vector<std::vector<int>>& alpha_blocks,
                     const std::vector<std::pair<int, int>>& beta_pairs, const Partition& delta,
                     std::vector<std::pair<int, int>>& forced) {
  if (alpha_blocks.size() == static_cast<std::size_t>(s.order()) || delta.is_full()) {
    return;
  }
  int n = s.order();
  std::vector<char> prem(n);
  for (auto [c1, d1] : beta_pairs) {
    if (c1 > d1) {
      continue;
    }
    bool left_trivial = delta.related(c1, d1);
    for (auto [c2, d2] : beta_pairs) {
      if (left_trivial && delta.related(c2, d2)) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        prem[x] = delta.related(s.mul(c1, x, c2), s.mul(d1, x, d2));
      }
      for (const auto& block : alpha_blocks) {
        bool any = false;
        for (int x : block) {
          if (prem[x]) {
            any = true;
            break;
          }
        }
        if (!any) {
          continue;
        }
        for (int b : block) {
          if (!prem[b]) {
            forced.emplace_back(s.mul(c1, b, c2), s.mul(d1, b, d2));
          }
        }
      }
    }
  }
}

}  // namespace detail

// Least congruence delta with C(alpha, beta; delta), computed as a Kleene
// iteration: sweep the conditions against the current delta, add every
// forced conclusion pair, close back to a congruence, repeat until a clean
// sweep. For completely simple inputs only C3 is scanned.
inline Partition commutator_bruteforce(const FiniteSemigroup& s, const Partition& alpha,
                                       const Partition& beta, int guard = kMaxOracleOrder) {
  if (s.order() > guard) {
    throw TooLarge("commutator oracle refused for order " + std::to_string(s.order())
                   + " (guard " + std::to_string(guard) + ")");
  }
  detail::check_congruence_arg(s, alpha, "alpha");
  detail::check_congruence_arg(s, beta, "beta");
  bool cs = is_completely_simple(s);
  auto alpha_blocks = alpha.blocks();
  auto beta_pairs = detail::related_pairs(beta);
  Partition delta = Partition::singletons(s.order());
  while (true) {
    std::vector<std::pair<int, int>> forced;
    if (!cs) {
      detail::sweep_c1(s, alpha_blocks, beta_pairs, delta, forced);
      detail::sweep_c2(s, alpha_blocks, beta_pairs, delta, forced);
    }
    detail::sweep_c3(s, alpha_blocks, beta_pairs, delta, forced);
    if (forced.empty()) {
      return delta;
    }
    delta = congruence_closure(s, delta, forced, s.order());
  }
}

// ---- dispatcher ---------------------------------------------------------------

enum class CommutatorMethod { automatic, fast, oracle, both };

// Carries both results; raised by the `both` mode on disagreement. This is a
// test-failure signal, not a recoverable state.
struct CommutatorMismatch : SemicommError {
  Partition fast_result;
  Partition oracle_result;
  CommutatorMismatch(Partition f, Partition o)
      : SemicommError("fast and oracle commutators disagree"),
        fast_result(std::move(f)),
        oracle_result(std::move(o)) {}
};

inline Partition commutator(const ReesMatrixSemigroup& rs, const Partition& alpha,
                            const Partition& beta,
                            CommutatorMethod method = CommutatorMethod::automatic,
                            int oracle_guard = kMaxOracleOrder) {
  switch (method) {
    case CommutatorMethod::automatic:
    case CommutatorMethod::fast:
      return commutator_fast(rs, alpha, beta);
    case CommutatorMethod::oracle:
      return commutator_bruteforce(rs.flattened(), alpha, beta, oracle_guard);
    case CommutatorMethod::both: {
      auto f = commutator_fast(rs, alpha, beta);
      auto o = commutator_bruteforce(rs.flattened(), alpha, beta, oracle_guard);
      if (f != o) {
        throw CommutatorMismatch(std::move(f), std::move(o));
      }
      return f;
    }
  }
  throw MethodUnavailable("unknown commutator method");
}

// Plain-table entry point. The fast path decomposes the input, computes in
// Rees coordinates and transports the result back.
inline Partition commutator(const FiniteSemigroup& s, const Partition& alpha,
                            const Partition& beta,
                            CommutatorMethod method = CommutatorMethod::automatic,
                            int oracle_guard = kMaxOracleOrder) {
  auto fast_via_decomposition = [&]() {
    auto dec = rees_decompose(s);
    auto transport = [&](const Partition& p) {
      std::vector<int> raw(s.order());
      for (int x = 0; x < s.order(); ++x) {
        raw[x] = p.block_of(dec.iso[x]);
      }
      return Partition::from_block_ids(std::move(raw));
    };
    auto result_rs = commutator_fast(dec.rs, transport(alpha), transport(beta));
    std::vector<int> raw(s.order());
    for (int x = 0; x < s.order(); ++x) {
      raw[dec.iso[x]] = result_rs.block_of(x);
    }
    return Partition::from_block_ids(std::move(raw));
  };

  switch (method) {
    case CommutatorMethod::automatic:
      if (is_completely_simple(s)) {
        return fast_via_decomposition();
      }
      return commutator_bruteforce(s, alpha, beta, oracle_guard);
    case CommutatorMethod::fast:
      if (!is_completely_simple(s)) {
        throw MethodUnavailable("fast method needs a completely simple semigroup");
      }
      return fast_via_decomposition();
    case CommutatorMethod::oracle:
      return commutator_bruteforce(s, alpha, beta, oracle_guard);
    case CommutatorMethod::both: {
      if (!is_completely_simple(s)) {
        throw MethodUnavailable("fast method needs a completely simple semigroup");
      }
      auto f = fast_via_decomposition();
      auto o = commutator_bruteforce(s, alpha, beta, oracle_guard);
      if (f != o) {
        throw CommutatorMismatch(std::move(f), std::move(o));
      }
      return f;
    }
  }
  throw MethodUnavailable("unknown commutator method");
}

}  // namespace semicomm
