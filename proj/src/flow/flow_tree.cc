#include "weft/flow/flow_tree.h"

namespace weft {

FlowId FlowTree::add(Flow flow) {
  FlowId id{static_cast<std::uint32_t>(flows_.size())};
  if (flow.kind == FlowKind::kBlock && flow.dom_origin) {
    std::uint32_t node = flow.dom_origin->value;
    if (node >= block_by_node_.size()) block_by_node_.resize(node + 1);
    block_by_node_[node] = id;
  }
  flow.live = true;
  flows_.push_back(std::move(flow));
  ++live_;
  return id;
}

void FlowTree::clear() {
  flows_.clear();
  block_by_node_.clear();
  root_.reset();
  live_ = 0;
  laid_out_viewport.reset();
}

void FlowTree::discard_children(FlowId id) {
  std::vector<FlowId> pending(flows_[id.value].children.begin(), flows_[id.value].children.end());
  flows_[id.value].children.clear();
  while (!pending.empty()) {
    FlowId current = pending.back();
    pending.pop_back();
    Flow& f = flows_[current.value];
    for (FlowId child : f.children) pending.push_back(child);
    if (f.kind == FlowKind::kBlock && f.dom_origin && f.dom_origin->value < block_by_node_.size() &&
        block_by_node_[f.dom_origin->value] == current) {
      block_by_node_[f.dom_origin->value].reset();
    }
    f.live = false;
    f.children.clear();
    f.fragments.clear();
    f.units.clear();
    f.metrics = LayoutMetrics{};
    --live_;
  }
}

std::optional<FlowId> FlowTree::block_for(NodeId node) const {
  if (node.value >= block_by_node_.size()) return std::nullopt;
  return block_by_node_[node.value];
}

std::vector<FlowId> FlowTree::preorder() const {
  std::vector<FlowId> out;
  if (!root_) return out;
  out.reserve(live_);
  std::vector<FlowId> stack{*root_};
  while (!stack.empty()) {
    FlowId current = stack.back();
    stack.pop_back();
    out.push_back(current);
    const auto& children = flows_[current.value].children;
    for (std::size_t i = children.size(); i-- > 0;) stack.push_back(children[i]);
  }
  return out;
}

FlowTree::Indexed FlowTree::indexed() const {
  Indexed out;
  out.order = preorder();
  std::vector<std::uint32_t> index_of(flows_.size(), TreeShape::kNoParent);
  std::vector<std::uint32_t> parents;
  parents.reserve(out.order.size());
  for (std::uint32_t i = 0; i < out.order.size(); ++i) {
    index_of[out.order[i].value] = i;
    const auto& parent = flows_[out.order[i].value].parent;
    parents.push_back(i == 0 || !parent ? TreeShape::kNoParent : index_of[parent->value]);
  }
  if (!parents.empty()) out.shape = TreeShape(std::move(parents));
  return out;
}

}  // namespace weft
