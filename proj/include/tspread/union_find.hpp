#pragma once

#include <vector>

namespace tspread {

/// Disjoint sets over 0..size-1 with path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t u) {
    std::size_t root = u;
    while (root != parent_[root]) root = parent_[root];
    while (u != parent_[u]) {
      std::size_t next = parent_[u];
      parent_[u] = root;
      u = next;
    }
    return root;
  }

  void unite(std::size_t u, std::size_t v) {
    std::size_t ru = find(u), rv = find(v);
    if (ru != rv) parent_[rv] = ru;
  }

  bool connected(std::size_t u, std::size_t v) { return find(u) == find(v); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace tspread
