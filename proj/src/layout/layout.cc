#include "weft/layout/layout.h"

#include <algorithm>

#include "weft/base/format.h"
#include "weft/flow/builder.h"

namespace weft {

void compute_intrinsic_width(FlowTree& flows, FlowId id) {
  Flow& f = flows.at(id);
  LayoutMetrics& m = f.metrics;
  if (f.kind == FlowKind::kInline) {
    double min = 0;
    double pref = 0;
    for (const TextUnit& u : f.units) {
      min = std::max(min, u.width);
      pref += (u.space_before ? u.space_width : 0) + u.width;
    }
    m.min_width = min;
    m.pref_width = pref;
  } else {
    double extra = f.style.padding.horizontal() + f.style.margin.horizontal();
    if (f.style.width) {
      m.min_width = m.pref_width = *f.style.width + extra;
    } else {
      double min = 0;
      double pref = 0;
      for (FlowId child : f.children) {
        min = std::max(min, flows.at(child).metrics.min_width);
        pref = std::max(pref, flows.at(child).metrics.pref_width);
      }
      m.min_width = min + extra;
      m.pref_width = pref + extra;
    }
  }
  m.intrinsic_done = true;
}

void assign_width(FlowTree& flows, FlowId id, double viewport_width) {
  Flow& f = flows.at(id);
  LayoutMetrics& m = f.metrics;
  const Flow* parent = f.parent ? &flows.at(*f.parent) : nullptr;
  double containing = parent ? parent->metrics.content_width : viewport_width;
  double parent_left = parent ? parent->style.padding.left : 0;
  if (f.kind == FlowKind::kInline) {
    m.used_width = std::max(0.0, containing);
    m.x = parent_left;
  } else {
    if (f.style.width) {
      m.used_width = *f.style.width + f.style.padding.horizontal();
    } else {
      m.used_width = std::max(0.0, containing - f.style.margin.horizontal());
    }
    m.x = parent_left + f.style.margin.left;
  }
  if (!parent) m.y = f.style.margin.top;
  double content = std::max(0.0, m.used_width - f.style.padding.horizontal());
  m.children_inputs_changed = !m.width_done || f.self_dirty || content != m.content_width;
  m.content_width = content;
  m.width_done = true;
}

void compute_height(FlowTree& flows, FlowId id) {
  Flow& f = flows.at(id);
  LayoutMetrics& m = f.metrics;
  if (f.kind == FlowKind::kInline) {
    m.lines = break_lines(f.units, m.used_width);
    double h = 0;
    for (const LineBox& line : m.lines) h += line.height;
    m.used_height = h;
  } else {
    double cursor = f.style.padding.top;
    for (FlowId child_id : f.children) {
      Flow& child = flows.at(child_id);
      const Edges& margin = child.style.margin;
      bool block = child.kind == FlowKind::kBlock;
      double top = block ? margin.top : 0;
      double bottom = block ? margin.bottom : 0;
      child.metrics.y = cursor + top;
      cursor += top + child.metrics.used_height + bottom;
    }
    double content = cursor - f.style.padding.top;
    m.used_height = (f.style.height ? *f.style.height : content) + f.style.padding.vertical();
  }
  m.height_done = true;
}

std::vector<LineBox> break_lines(const std::vector<TextUnit>& units, double width) {
  std::vector<LineBox> lines;
  std::size_t start = 0;
  double top = 0;
  while (start < units.size()) {
    double used = units[start].width;
    std::size_t end = start + 1;
    while (end < units.size()) {
      const TextUnit& u = units[end];
      double needed = (u.space_before ? u.space_width : 0) + u.width;
      if (used + needed > width) break;
      used += needed;
      ++end;
    }

    LineBox line;
    line.top = top;
    line.width = used;
    double max_font = 0;
    double x = 0;
    for (std::size_t i = start; i < end; ++i) {
      const TextUnit& u = units[i];
      if (i > start && u.space_before) {
        line.segments.back().text.push_back(' ');
        x += u.space_width;
      }
      for (const TextPiece& piece : u.pieces) {
        max_font = std::max(max_font, piece.font_size);
        if (!line.segments.empty() && line.segments.back().font_size == piece.font_size &&
            line.segments.back().color == piece.color) {
          line.segments.back().text += piece.text;
        } else {
          line.segments.push_back(LineSegment{x, piece.text, piece.font_size, piece.color});
        }
        x += static_cast<double>(code_point_count(piece.text)) * char_advance(piece.font_size);
      }
    }
    line.height = line_height(max_font);
    line.baseline = top + max_font;
    top += line.height;
    lines.push_back(std::move(line));
    start = end;
  }
  return lines;
}

LayoutStats layout(FlowTree& flows, const LayoutOptions& options) {
  LayoutStats stats;
  if (flows.empty()) return stats;
  FlowTree::Indexed indexed = flows.indexed();
  const auto& order = indexed.order;
  stats.intrinsic = execute_traversal(
      indexed.shape, TraversalDirection::kBottomUp,
      [&](std::uint32_t i) { compute_intrinsic_width(flows, order[i]); }, options.traversal);
  stats.widths = execute_traversal(
      indexed.shape, TraversalDirection::kTopDown,
      [&](std::uint32_t i) { assign_width(flows, order[i], options.viewport_width); }, options.traversal);
  stats.heights = execute_traversal(
      indexed.shape, TraversalDirection::kBottomUp,
      [&](std::uint32_t i) { compute_height(flows, order[i]); }, options.traversal);
  for (FlowId id : order) {
    flows.at(id).self_dirty = false;
    flows.at(id).descendant_dirty = false;
  }
  flows.laid_out_viewport = options.viewport_width;
  return stats;
}

namespace {

void serial_intrinsic(FlowTree& flows, FlowId id) {
  for (FlowId child : flows.at(id).children) serial_intrinsic(flows, child);
  compute_intrinsic_width(flows, id);
}

void serial_widths(FlowTree& flows, FlowId id, double viewport_width) {
  assign_width(flows, id, viewport_width);
  for (FlowId child : flows.at(id).children) serial_widths(flows, child, viewport_width);
}

void serial_heights(FlowTree& flows, FlowId id) {
  for (FlowId child : flows.at(id).children) serial_heights(flows, child);
  compute_height(flows, id);
}

}  // namespace

void layout_serial(FlowTree& flows, double viewport_width) {
  if (flows.empty()) return;
  serial_intrinsic(flows, flows.root());
  serial_widths(flows, flows.root(), viewport_width);
  serial_heights(flows, flows.root());
  for (FlowId id : flows.preorder()) {
    flows.at(id).self_dirty = false;
    flows.at(id).descendant_dirty = false;
  }
  flows.laid_out_viewport = viewport_width;
}

std::vector<Point> absolute_origins(const FlowTree& flows) {
  std::vector<Point> out(flows.id_capacity());
  for (FlowId id : flows.preorder()) {
    const Flow& f = flows.at(id);
    const LayoutMetrics& m = f.metrics;
    if (!m.intrinsic_done || !m.width_done || !m.height_done) {
      throw LayoutError(LayoutErrc::kIncomplete, "flow " + std::to_string(id.value) + " has no geometry");
    }
    Point base = f.parent ? out[f.parent->value] : Point{};
    out[id.value] = Point{base.x + m.x, base.y + m.y};
  }
  return out;
}

std::string dump_layout(const FlowTree& flows) {
  std::string out;
  std::vector<Point> origins = absolute_origins(flows);
  for (FlowId id : flows.preorder()) {
    const Flow& f = flows.at(id);
    out += f.kind == FlowKind::kBlock ? "block " : "inline ";
    out += f.dom_origin ? std::to_string(f.dom_origin->value) : "anon";
    const Point& p = origins[id.value];
    out += ' ' + format_px(p.x) + ' ' + format_px(p.y) + ' ' + format_px(f.metrics.used_width) + ' ' +
           format_px(f.metrics.used_height) + '\n';
  }
  return out;
}

}  // namespace weft
