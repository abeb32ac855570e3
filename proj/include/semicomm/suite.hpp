#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/group.hpp"
#include "semicomm/rees.hpp"

namespace semicomm {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

struct SuiteInstance {
  std::string label;
  ReesMatrixSemigroup rs;
};

namespace detail {

inline int element_order(const FiniteGroup& g, int a) {
  int k = 1;
  int x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

// Distinct sandwich fillings for the one free slot of a 2x2 shape: identity,
// the first non-identity element, and a maximal-order element (a generator
// when the group is cyclic).
inline std::vector<int> free_slot_choices(const FiniteGroup& g) {
  std::vector<int> out{g.identity()};
  if (g.order() > 1) {
    int first = g.identity() == 0 ? 1 : 0;
    out.push_back(first);
    int best = -1, best_order = 0;
    for (int a = 0; a < g.order(); ++a) {
      if (a == first || a == g.identity()) {
        continue;
      }
      int k = element_order(g, a);
      if (k > best_order) {
        best = a;
        best_order = k;
      }
    }
    if (best != -1 && best_order >= element_order(g, first)) {
      out.push_back(best);
    } else if (g.order() > 2) {
      out.push_back(first == 1 ? 2 : 1);
    }
  }
  return out;
}

}  // namespace detail

// The verification family: five small groups, the four index shapes up to
// 2x2, and every distinct normalized sandwich matrix our slot policy yields
// (border-only shapes admit exactly one).
inline std::vector<SuiteInstance> small_suite() {
  std::vector<SuiteInstance> out;
  std::vector<FiniteGroup> groups{cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                  direct_product(cyclic_group(2), cyclic_group(2)),
                                  symmetric_group(3)};
  const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (const auto& g : groups) {
    for (auto [i_size, lambda_size] : shapes) {
      std::vector<std::vector<int>> base(lambda_size, std::vector<int>(i_size, g.identity()));
      if (i_size == 2 && lambda_size == 2) {
        for (int choice : detail::free_slot_choices(g)) {
          auto p = base;
          p[1][1] = choice;
          out.push_back({g.name() + "[2x2,p11=" + std::to_string(choice) + "]",
                         ReesMatrixSemigroup(g, i_size, lambda_size, p)});
        }
      } else {
        out.push_back({g.name() + "[" + std::to_string(i_size) + "x"
                           + std::to_string(lambda_size) + "]",
                       ReesMatrixSemigroup(g, i_size, lambda_size, base)});
      }
    }
  }
  return out;
}

// 4x4 builtin recipe: the non-border 3x3 block lists all
// group elements in row-major order, padding the remaining slots with the
// identity, so the sandwich entries cover the whole group.
inline ReesMatrixSemigroup covering_instance_4x4(const FiniteGroup& g) {
  int e = g.identity();
  std::vector<std::vector<int>> p(4, std::vector<int>(4, e));
  int next = 0;
  for (int l = 1; l < 4; ++l) {
    for (int i = 1; i < 4; ++i) {
      p[l][i] = next < g.order() ? next : e;
      ++next;
    }
  }
  return ReesMatrixSemigroup(g, 4, 4, std::move(p));
}

inline ReesMatrixSemigroup builtin_instance(const std::string& name) {
  if (name == "d3-paper") {
    return covering_instance_4x4(dihedral_group(3));
  }
  if (name == "q8-paper") {
    return covering_instance_4x4(quaternion_group());
  }
  throw SemicommError("unknown builtin \"" + name + "\" (expected d3-paper or q8-paper)");
}

// Random normalized sandwich matrix whose entries cover the group; needs
// enough non-border slots for every non-identity element.
inline ReesMatrixSemigroup random_covering_rees(const FiniteGroup& g, int i_size,
                                                int lambda_size, std::mt19937_64& rng) {
  int slots = (i_size - 1) * (lambda_size - 1);
  if (slots < g.order() - 1) {
    throw TooLarge("not enough free sandwich slots to cover the group");
  }
  std::vector<std::pair<int, int>> free;
  for (int l = 1; l < lambda_size; ++l) {
    for (int i = 1; i < i_size; ++i) {
      free.emplace_back(l, i);
    }
  }
  std::shuffle(free.begin(), free.end(), rng);
  std::vector<std::vector<int>> p(lambda_size, std::vector<int>(i_size, g.identity()));
  int k = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (a == g.identity()) {
      continue;
    }
    p[free[k].first][free[k].second] = a;
    ++k;
  }
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (; k < static_cast<int>(free.size()); ++k) {
    p[free[k].first][free[k].second] = pick(rng);
  }
  return ReesMatrixSemigroup(g, i_size, lambda_size, std::move(p));
}

}  // namespace semicomm
