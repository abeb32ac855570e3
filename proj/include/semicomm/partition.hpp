#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "semicomm/errors.hpp"

namespace semicomm {

namespace detail {

// Plain union-find over {0..n-1}.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Returns true iff the two classes were distinct before the call.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Canonical partition of {0..n-1}. Block ids are assigned in order of each
// block's minimum element, so equal partitions have equal block_id arrays.
class Partition {
 public:
  Partition() = default;

  static Partition singletons(int n) {
    Partition p;
    p.size_ = n;
    p.block_id_.resize(n);
    std::iota(p.block_id_.begin(), p.block_id_.end(), 0);
    p.num_blocks_ = n;
    return p;
  }

  static Partition full(int n) {
    Partition p;
    p.size_ = n;
    p.block_id_.assign(n, 0);
    p.num_blocks_ = n > 0 ? 1 : 0;
    return p;
  }

  // Accepts any labelling and canonicalizes it.
  static Partition from_block_ids(std::vector<int> raw) {
    Partition p;
    p.size_ = static_cast<int>(raw.size());
    p.block_id_.assign(p.size_, -1);
    std::map<int, int> relabel;
    for (int x = 0; x < p.size_; ++x) {
      auto [it, fresh] = relabel.try_emplace(raw[x], static_cast<int>(relabel.size()));
      p.block_id_[x] = it->second;
      (void) fresh;
    }
    p.num_blocks_ = static_cast<int>(relabel.size());
    return p;
  }

  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& block : blocks) {
      for (int x : block) {
        if (x < 0 || x >= n) {
          throw OutOfRange("block element " + std::to_string(x) + " out of range for carrier "
                           + std::to_string(n));
        }
        if (raw[x] != -1) {
          throw MalformedTable("element " + std::to_string(x) + " appears in two blocks");
        }
        raw[x] = id;
      }
      ++id;
    }
    for (int x = 0; x < n; ++x) {
      if (raw[x] == -1) {
        throw MalformedTable("element " + std::to_string(x) + " is missing from the blocks");
      }
    }
    return from_block_ids(std::move(raw));
  }

  // Equivalence closure of the listed pairs; no operation involved.
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    detail::UnionFind uf(n);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw OutOfRange("pair (" + std::to_string(a) + ", " + std::to_string(b)
                         + ") out of range for carrier " + std::to_string(n));
      }
      uf.unite(a, b);
    }
    return from_union_find(uf);
  }

  static Partition from_union_find(detail::UnionFind& uf) {
    std::vector<int> raw(uf.size());
    for (int x = 0; x < uf.size(); ++x) {
      raw[x] = uf.find(x);
    }
    return from_block_ids(std::move(raw));
  }

  int size() const { return size_; }
  int num_blocks() const { return num_blocks_; }
  int block_of(int a) const { return block_id_[a]; }
  bool related(int a, int b) const { return block_id_[a] == block_id_[b]; }
  const std::vector<int>& block_ids() const { return block_id_; }

  bool is_singletons() const { return num_blocks_ == size_; }
  bool is_full() const { return num_blocks_ <= 1; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(num_blocks_);
    for (int x = 0; x < size_; ++x) {
      out[block_id_[x]].push_back(x);
    }
    return out;
  }

  // True iff *this refines other (every block of *this is inside a block of other).
  bool leq(const Partition& other) const {
    std::vector<int> image(num_blocks_, -1);
    for (int x = 0; x < size_; ++x) {
      int b = block_id_[x];
      if (image[b] == -1) {
        image[b] = other.block_id_[x];
      } else if (image[b] != other.block_id_[x]) {
        return false;
      }
    }
    return true;
  }

  Partition meet(const Partition& other) const {
    std::map<std::pair<int, int>, int> relabel;
    std::vector<int> raw(size_);
    for (int x = 0; x < size_; ++x) {
      auto key = std::make_pair(block_id_[x], other.block_id_[x]);
      auto [it, fresh] = relabel.try_emplace(key, static_cast<int>(relabel.size()));
      raw[x] = it->second;
      (void) fresh;
    }
    return from_block_ids(std::move(raw));
  }

  // Join as equivalences. Congruence join must go through the closure engine
  // instead (see congruence_join).
  Partition join(const Partition& other) const {
    detail::UnionFind uf(size_);
    std::vector<int> first_seen(std::max(num_blocks_, other.num_blocks_), -1);
    for (int x = 0; x < size_; ++x) {
      int b = block_id_[x];
      if (first_seen[b] == -1) {
        first_seen[b] = x;
      } else {
        uf.unite(first_seen[b], x);
      }
    }
    std::fill(first_seen.begin(), first_seen.end(), -1);
    for (int x = 0; x < size_; ++x) {
      int b = other.block_id_[x];
      if (first_seen[b] == -1) {
        first_seen[b] = x;
      } else {
        uf.unite(first_seen[b], x);
      }
    }
    return from_union_find(uf);
  }

  // Pairs (first-of-block, member) that regenerate the partition; linear in n.
  std::vector<std::pair<int, int>> spanning_pairs() const {
    std::vector<int> first_seen(num_blocks_, -1);
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size_; ++x) {
      int b = block_id_[x];
      if (first_seen[b] == -1) {
        first_seen[b] = x;
      } else {
        out.emplace_back(first_seen[b], x);
      }
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  // Lexicographic on (size, block_id); a stable total order for sorting.
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) {
      return a.size_ < b.size_;
    }
    return a.block_id_ < b.block_id_;
  }

 private:
  int size_ = 0;
  std::vector<int> block_id_;
  int num_blocks_ = 0;
};

// A congruence is a partition compatible with the owning algebra's
// operations; compatibility is checked by is_congruence, not stored.
using Congruence = Partition;

// Enumerates all partitions of {0..n-1} as restricted growth strings.
// Intended for small n only (Bell numbers explode).
inline std::vector<Partition> all_partitions(int n, int max_n = 8) {
  if (n > max_n) {
    throw TooLarge("partition enumeration refused for carrier of size " + std::to_string(n));
  }
  std::vector<Partition> out;
  if (n <= 0) {
    out.push_back(Partition::singletons(0));
    return out;
  }
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(Partition::from_block_ids(rgs));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) {
      break;
    }
  }
  return out;
}

}  // namespace semicomm
