// union_find.hpp: disjoint sets with path halving and union by size.
#pragma once

#include <cstdint>
#include <vector>

namespace mixgraph::vertex {

class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::uint32_t n);

  std::uint32_t add();
  std::uint32_t find(std::uint32_t v);
  std::uint32_t find(std::uint32_t v) const;
  // Returns true when two distinct sets were merged.
  bool unite(std::uint32_t a, std::uint32_t b);

  std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size()); }
  std::uint32_t component_size(std::uint32_t v) const { return size_[find(v)]; }
  std::uint32_t largest() const { return largest_; }
  std::uint32_t components() const { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t largest_ = 0;
  std::uint32_t components_ = 0;
};

}  // namespace mixgraph::vertex
