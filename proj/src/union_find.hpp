#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace knotscope::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  std::size_t find(int x) { return find(static_cast<std::size_t>(x)); }

  // The smaller root wins so class representatives are deterministic.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  void unite(int a, int b) { unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace knotscope::detail
