#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weft/engine/script.h"
#include "weft/layout/layout.h"

namespace weft {

struct RenderRequest {
  std::string html;
  std::vector<std::string> css_texts;
  LayoutOptions layout;
  std::size_t chunk_size = 4096;  // code points per network chunk
  bool dump_tokens = false;
  bool dump_dom = false;
  bool dump_style = false;
  bool dump_flow = false;
  bool dump_layout = false;
  bool raster = false;
  // Applied after the load, followed by an incremental relayout.
  std::vector<ScriptCommand> mutations;
  // Node paths whose geometry is asked of the layout task after the last
  // snapshot.
  std::vector<std::string> geometry_queries;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

// Output of one display pass: after load, and again after mutations.
struct Snapshot {
  std::string label;
  std::string display_json;
  std::optional<std::string> ppm;
  std::string dom_dump;
  std::string style_dump;
  std::string flow_dump;
  std::string layout_dump;
  std::size_t flow_count = 0;
  std::size_t layout_visits = 0;
};

struct GeometryReply {
  std::string path;
  bool found = false;   // path names a node
  bool has_box = false; // node generated a block flow
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
};

struct RenderResult {
  std::string token_dump;
  std::vector<Snapshot> snapshots;
  std::vector<StageTiming> timings;
  std::vector<std::string> prefetch;
  std::vector<std::string> diagnostics;
  std::vector<GeometryReply> geometry;
  std::size_t dirtied_flows = 0;
};

// Runs parse, style+layout and display as three threads joined by channels.
// A failure in any task stops the others and surfaces as
// EngineError(kPipeline) carrying the task's message.
RenderResult run_pipeline(const RenderRequest& request);

}  // namespace weft
