#pragma once

#include <vector>

#include "semicomm/congruence.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm::test {

// x * y = x
inline FiniteSemigroup left_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[x][y] = x;
    }
  }
  return make_semigroup(std::move(t), "LZ" + std::to_string(n));
}

// meet on {0 < 1 < ... < n-1}
inline FiniteSemigroup chain_semilattice(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[x][y] = std::min(x, y);
    }
  }
  return make_semigroup(std::move(t), "chain" + std::to_string(n));
}

// (r1,c1) * (r2,c2) = (r1,c2), encoded r * cols + c
inline FiniteSemigroup rectangular_band(int rows, int cols) {
  int n = rows * cols;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[x][y] = (x / cols) * cols + y % cols;
    }
  }
  return make_semigroup(std::move(t), "RB");
}

// everything multiplies to 0
inline FiniteSemigroup null_semigroup(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  return make_semigroup(std::move(t), "null" + std::to_string(n));
}

// all maps {0,1} -> {0,1} under composition (f*g)(x) = f(g(x));
// maps listed as (f(0), f(1)): 00, 01 (identity), 10, 11
inline FiniteSemigroup full_transformation_monoid_2() {
  const int maps[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  auto index_of = [&](int v0, int v1) {
    for (int k = 0; k < 4; ++k) {
      if (maps[k][0] == v0 && maps[k][1] == v1) {
        return k;
      }
    }
    return -1;
  };
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      t[f][g] = index_of(maps[f][maps[g][0]], maps[f][maps[g][1]]);
    }
  }
  return make_semigroup(std::move(t), "T2");
}

// Independent lattice oracle: filter every partition of the carrier.
// Only for small orders (Bell numbers).
inline std::vector<Partition> congruences_by_partition_filter(const FiniteSemigroup& s) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions(s.order())) {
    if (is_congruence(s, p).ok) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace semicomm::test
