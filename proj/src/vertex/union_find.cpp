#include "mixgraph/vertex/union_find.hpp"

#include <algorithm>
#include <utility>

namespace mixgraph::vertex {

UnionFind::UnionFind(std::uint32_t n) {
  parent_.reserve(n);
  size_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) add();
}

std::uint32_t UnionFind::add() {
  const auto id = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(id);
  size_.push_back(1);
  largest_ = std::max<std::uint32_t>(largest_, 1);
  ++components_;
  return id;
}

std::uint32_t UnionFind::find(std::uint32_t v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

std::uint32_t UnionFind::find(std::uint32_t v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  largest_ = std::max(largest_, size_[a]);
  --components_;
  return true;
}

}  // namespace mixgraph::vertex
