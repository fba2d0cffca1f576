#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace hyperlab {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Tarjan's algorithm, iterative. component[v] numbers components in reverse
// topological order (sinks first).
struct SccResult {
  std::vector<std::size_t> component;
  std::size_t count = 0;
};

SccResult strongly_connected_components(const Adjacency& adj);

// Components with no edge leaving them.
std::vector<std::vector<std::size_t>> terminal_components(const Adjacency& adj);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) noexcept {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace hyperlab
