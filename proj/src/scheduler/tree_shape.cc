#include "weft/scheduler/tree_shape.h"

#include <stdexcept>

namespace weft {

TreeShape::TreeShape(std::vector<std::uint32_t> parents) : parent_(std::move(parents)) {
  const std::size_t n = parent_.size();
  if (n == 0) return;
  if (parent_[0] != kNoParent) throw std::invalid_argument("TreeShape: node 0 must be the root");
  child_offsets_.assign(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (parent_[i] >= i) throw std::invalid_argument("TreeShape: parent index must precede child");
    ++child_offsets_[parent_[i] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_offsets_[i + 1] += child_offsets_[i];
  child_list_.resize(n - 1);
  std::vector<std::uint32_t> cursor(child_offsets_.begin(), child_offsets_.end() - 1);
  for (std::size_t i = 1; i < n; ++i) child_list_[cursor[parent_[i]]++] = static_cast<std::uint32_t>(i);

  subtree_size_.assign(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) subtree_size_[parent_[i]] += subtree_size_[i];
  depth_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) depth_[i] = depth_[parent_[i]] + 1;
}

}  // namespace weft
