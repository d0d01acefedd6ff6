#include "weft/engine/pipeline.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <thread>
#include <variant>

#include "weft/base/overloaded.h"
#include "weft/base/utf8.h"
#include "weft/display/display_list.h"
#include "weft/dom/serialize.h"
#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"
#include "weft/flow/builder.h"
#include "weft/scheduler/channel.h"

namespace weft {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Messages to the layout task.
struct DomReady {
  DomTree tree;
  std::vector<ScriptCommand> deferred;
};
struct Mutate {
  std::vector<ScriptCommand> commands;
};
struct GeometryQuery {
  std::string path;
  Sender<GeometryReply> reply;
};
struct Quit {};
using LayoutMessage = std::variant<DomReady, Mutate, GeometryQuery, Quit>;

// Messages to the display task.
struct LayoutDone {
  Snapshot partial;  // label and dumps filled in by the layout task
  FlowTree flows;
};
using DisplayMessage = std::variant<LayoutDone, Quit>;

// Messages to the main thread.
struct Parsed {
  std::string token_dump;
  std::vector<std::string> prefetch;
  std::vector<std::string> diagnostics;
};
struct Displayed {
  Snapshot snapshot;
};
struct Timing {
  StageTiming timing;
};
struct Notes {
  std::vector<std::string> diagnostics;
  std::size_t dirtied_flows = 0;
};
struct Failure {
  std::string message;
};
using Report = std::variant<Parsed, Displayed, Timing, Notes, Failure>;

void report(const Sender<Report>& out, Report message) { (void)out.send(std::move(message)); }

void parser_task(const RenderRequest& request, Sender<LayoutMessage> layout, Sender<Report> out) {
  try {
    auto start = Clock::now();
    DocumentParser parser(request.dump_tokens);
    std::u32string text = utf8_decode(request.html);
    std::u32string_view rest = text;
    std::size_t chunk = request.chunk_size == 0 ? std::max<std::size_t>(rest.size(), 1) : request.chunk_size;
    while (!rest.empty()) {
      std::size_t n = std::min(chunk, rest.size());
      parser.feed(rest.substr(0, n));
      rest.remove_prefix(n);
    }
    parser.finish();
    report(out, Timing{{"parse", elapsed_ms(start)}});
    report(out, Parsed{parser.token_dump(), parser.prefetch(), parser.diagnostics()});
    (void)layout.send(DomReady{parser.take_tree(), parser.deferred_commands()});
  } catch (const std::exception& e) {
    report(out, Failure{std::string("parser: ") + e.what()});
  }
}

class LayoutTask {
 public:
  LayoutTask(const RenderRequest& request, Receiver<LayoutMessage> inbox, Sender<DisplayMessage> display,
             Sender<Report> out)
      : request_(request), inbox_(std::move(inbox)), display_(std::move(display)), out_(std::move(out)) {}

  void run() {
    try {
      while (auto message = inbox_.recv()) {
        if (std::holds_alternative<Quit>(*message)) break;
        std::visit([&](auto& m) { handle(m); }, *message);
      }
    } catch (const std::exception& e) {
      report(out_, Failure{std::string("layout: ") + e.what()});
    }
    (void)display_.send(Quit{});
  }

 private:
  void handle(DomReady& m) {
    auto start = Clock::now();
    page_.dom = std::move(m.tree);
    page_.css_texts = request_.css_texts;
    page_.rules = collect_rules(page_.dom, page_.css_texts, &page_.diagnostics);
    page_.styles = compute_styles(page_.dom, page_.rules, request_.layout.traversal);
    report(out_, Timing{{"style", elapsed_ms(start)}});
    start = Clock::now();
    page_.flows = build_flow_tree(page_.dom, page_.styles);
    report(out_, Timing{{"flow", elapsed_ms(start)}});
    start = Clock::now();
    LayoutStats stats = layout(page_.flows, request_.layout);
    report(out_, Timing{{"layout", elapsed_ms(start)}});
    Notes notes{page_.diagnostics, 0};
    if (!m.deferred.empty()) {
      MutationOutcome outcome = apply_mutations(page_, m.deferred);
      stats = incremental_relayout(page_.flows, request_.layout);
      notes.diagnostics.insert(notes.diagnostics.end(), outcome.diagnostics.begin(), outcome.diagnostics.end());
    }
    report(out_, std::move(notes));
    publish("load", stats.visits());
  }

  void handle(Mutate& m) {
    auto start = Clock::now();
    MutationOutcome outcome = apply_mutations(page_, m.commands);
    LayoutStats stats = incremental_relayout(page_.flows, request_.layout);
    report(out_, Timing{{"incremental-layout", elapsed_ms(start)}});
    report(out_, Notes{outcome.diagnostics, outcome.dirtied.size()});
    publish("mutated", stats.visits());
  }

  void handle(GeometryQuery& m) {
    GeometryReply reply;
    reply.path = m.path;
    if (auto node = page_.dom.resolve_path(m.path)) {
      reply.found = true;
      if (auto flow = page_.flows.block_for(*node)) {
        std::vector<Point> origins = absolute_origins(page_.flows);
        const Flow& f = page_.flows.at(*flow);
        reply.has_box = true;
        reply.x = origins[flow->value].x;
        reply.y = origins[flow->value].y;
        reply.w = f.metrics.used_width;
        reply.h = f.metrics.used_height;
      }
    }
    (void)m.reply.send(std::move(reply));
  }

  void handle(Quit&) {}

  void publish(const std::string& label, std::size_t visits) {
    Snapshot s;
    s.label = label;
    s.layout_visits = visits;
    s.flow_count = page_.flows.live_count();
    if (request_.dump_dom) s.dom_dump = dump_dom(page_.dom);
    if (request_.dump_style) s.style_dump = dump_style(page_.dom, page_.styles);
    if (request_.dump_flow) s.flow_dump = dump_flow(page_.flows);
    if (request_.dump_layout) s.layout_dump = dump_layout(page_.flows);
    // The display task gets its own copy; this task keeps the live tree
    // for later mutations and geometry queries.
    (void)display_.send(LayoutDone{std::move(s), page_.flows});
  }

  const RenderRequest& request_;
  Receiver<LayoutMessage> inbox_;
  Sender<DisplayMessage> display_;
  Sender<Report> out_;
  Page page_;
};

void display_task(const RenderRequest& request, Receiver<DisplayMessage> inbox, Sender<Report> out) {
  try {
    while (auto message = inbox.recv()) {
      auto* done = std::get_if<LayoutDone>(&*message);
      if (!done) break;
      auto start = Clock::now();
      DisplayList items = build_display_list(done->flows);
      Snapshot snapshot = std::move(done->partial);
      snapshot.display_json = display_list_json(items);
      report(out, Timing{{"display-list", elapsed_ms(start)}});
      if (request.raster) {
        start = Clock::now();
        double page_height = 0;
        if (!done->flows.empty()) {
          const Flow& root = done->flows.at(done->flows.root());
          page_height = root.metrics.y + root.metrics.used_height + root.style.margin.bottom;
        }
        int width = std::max(1, static_cast<int>(std::ceil(request.layout.viewport_width)));
        int height = std::max(1, static_cast<int>(std::ceil(page_height)));
        snapshot.ppm = encode_ppm(paint(items, width, height));
        report(out, Timing{{"paint", elapsed_ms(start)}});
      }
      report(out, Displayed{std::move(snapshot)});
    }
  } catch (const std::exception& e) {
    report(out, Failure{std::string("display: ") + e.what()});
  }
}

}  // namespace

RenderResult run_pipeline(const RenderRequest& request) {
  auto [layout_tx, layout_rx] = make_channel<LayoutMessage>();
  auto [display_tx, display_rx] = make_channel<DisplayMessage>();
  auto [report_tx, report_rx] = make_channel<Report>();

  std::thread display(display_task, std::cref(request), std::move(display_rx), report_tx);
  LayoutTask layout_task(request, std::move(layout_rx), std::move(display_tx), report_tx);
  std::thread layout([&layout_task] { layout_task.run(); });
  std::thread parser(parser_task, std::cref(request), layout_tx, report_tx);

  RenderResult result;
  std::optional<std::string> failure;
  // Blocks until the display snapshot labelled `label` arrives.
  auto wait_for = [&](const std::string& label) {
    while (!failure) {
      auto message = report_rx.recv();
      if (!message) {
        failure = "pipeline tasks exited early";
        break;
      }
      bool matched = false;
      std::visit(Overloaded{
                     [&](Parsed& p) {
                       result.token_dump = std::move(p.token_dump);
                       result.prefetch = std::move(p.prefetch);
                       result.diagnostics.insert(result.diagnostics.end(), p.diagnostics.begin(), p.diagnostics.end());
                     },
                     [&](Displayed& d) {
                       matched = d.snapshot.label == label;
                       result.snapshots.push_back(std::move(d.snapshot));
                     },
                     [&](Timing& t) { result.timings.push_back(std::move(t.timing)); },
                     [&](Notes& n) {
                       result.diagnostics.insert(result.diagnostics.end(), n.diagnostics.begin(), n.diagnostics.end());
                       result.dirtied_flows += n.dirtied_flows;
                     },
                     [&](Failure& f) { failure = std::move(f.message); },
                 },
                 *message);
      if (matched) return;
    }
  };

  {
    Sender<Report> drop = std::move(report_tx);  // main only reads reports
  }
  wait_for("load");
  if (!failure && !request.mutations.empty()) {
    (void)layout_tx.send(Mutate{request.mutations});
    wait_for("mutated");
  }
  if (!failure) {
    for (const std::string& path : request.geometry_queries) {
      auto [reply_tx, reply_rx] = make_channel<GeometryReply>();
      if (!layout_tx.send(GeometryQuery{path, std::move(reply_tx)})) break;
      if (auto reply = reply_rx.recv()) result.geometry.push_back(std::move(*reply));
    }
  }
  (void)layout_tx.send(Quit{});
  parser.join();
  layout.join();
  display.join();
  // Late timing reports (for example paint) may still be queued.
  while (auto message = report_rx.try_recv()) {
    if (auto* t = std::get_if<Timing>(&*message)) result.timings.push_back(std::move(t->timing));
    if (auto* f = std::get_if<Failure>(&*message); f && !failure) failure = f->message;
  }
  if (failure) throw EngineError(EngineErrc::kPipeline, *failure);
  return result;
}

}  // namespace weft
