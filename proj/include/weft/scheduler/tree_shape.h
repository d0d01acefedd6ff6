#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace weft {

// Immutable, index-addressed topology of a tree, as consumed by the
// traversal scheduler. Node 0 is the root and every node's parent has a
// smaller index (nodes are added in pre-order or breadth-first order).
class TreeShape {
 public:
  static constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

  TreeShape() = default;

  // parents[0] must be kNoParent, and parents[i] < i for all other i.
  // Children keep the relative order of their indices.
  explicit TreeShape(std::vector<std::uint32_t> parents);

  std::size_t size() const { return parent_.size(); }
  bool empty() const { return parent_.empty(); }
  std::uint32_t root() const { return 0; }

  std::uint32_t parent(std::uint32_t node) const { return parent_[node]; }
  std::span<const std::uint32_t> children(std::uint32_t node) const {
    return {child_list_.data() + child_offsets_[node],
            child_list_.data() + child_offsets_[node + 1]};
  }
  std::uint32_t subtree_size(std::uint32_t node) const { return subtree_size_[node]; }
  std::uint32_t depth(std::uint32_t node) const { return depth_[node]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> child_offsets_;
  std::vector<std::uint32_t> child_list_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<std::uint32_t> depth_;
};

}  // namespace weft
