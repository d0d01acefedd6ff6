// engine: command-line front end for the weft layout engine.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "weft/base/format.h"
#include "weft/engine/benchmark.h"
#include "weft/engine/page.h"
#include "weft/engine/pipeline.h"
#include "weft/engine/script.h"
#include "weft/engine/synthetic.h"
#include "weft/scheduler/traversal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::vector<std::string> css;
  unsigned workers = weft::logical_core_count();
  std::size_t cutoff = weft::kDefaultParallelCutoff;
  double viewport = weft::kDefaultViewportWidth;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--css", o.css, "Stylesheet file (repeatable)")->check(CLI::ExistingFile);
  cmd->add_option("--workers", o.workers, "Layout worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--parallel-cutoff", o.cutoff, "Subtrees up to this size run sequentially");
  cmd->add_option("--viewport", o.viewport, "Viewport width in pixels")->check(CLI::PositiveNumber);
}

weft::LayoutOptions layout_options(const CommonOptions& o) {
  weft::LayoutOptions options;
  options.viewport_width = o.viewport;
  options.traversal.workers = o.workers;
  options.traversal.sequential_cutoff = o.cutoff;
  return options;
}

std::vector<std::string> read_all(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(weft::read_file(p));
  return out;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) throw weft::EngineError(weft::EngineErrc::kIo, "cannot write " + path);
}

struct Dumps {
  bool tokens = false;
  bool dom = false;
  bool style = false;
  bool flow = false;
  bool layout = false;

  bool any() const { return tokens || dom || style || flow || layout; }
};

void add_dumps(CLI::App* cmd, Dumps& d) {
  cmd->add_flag("--dump-tokens", d.tokens, "Print the token stream");
  cmd->add_flag("--dump-dom", d.dom, "Print the document tree");
  cmd->add_flag("--dump-style", d.style, "Print computed styles");
  cmd->add_flag("--dump-flow", d.flow, "Print the flow tree");
  cmd->add_flag("--dump-layout", d.layout, "Print flow geometry");
}

void print_snapshot_dumps(const weft::Snapshot& s, const Dumps& d) {
  if (d.dom) std::cout << s.dom_dump;
  if (d.style) std::cout << s.style_dump;
  if (d.flow) std::cout << s.flow_dump;
  if (d.layout) std::cout << s.layout_dump;
}

void print_report(const weft::RenderResult& r) {
  for (const auto& t : r.timings) std::fprintf(stderr, "time\t%s\t%.3f ms\n", t.stage.c_str(), t.milliseconds);
  for (const auto& url : r.prefetch) std::fprintf(stderr, "prefetch\t%s\n", url.c_str());
  for (const auto& d : r.diagnostics) std::fprintf(stderr, "note\t%s\n", d.c_str());
}

void print_geometry(const weft::RenderResult& r) {
  for (const auto& g : r.geometry) {
    if (!g.found) {
      std::cout << "geometry " << g.path << " no-such-node\n";
    } else if (!g.has_box) {
      std::cout << "geometry " << g.path << " no-box\n";
    } else {
      std::cout << "geometry " << g.path << ' ' << weft::format_px(g.x) << ' ' << weft::format_px(g.y) << ' '
                << weft::format_px(g.w) << ' ' << weft::format_px(g.h) << '\n';
    }
  }
}

std::vector<unsigned> parse_worker_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw weft::EngineError(weft::EngineErrc::kUsage, "bad worker count '" + item + "'");
    }
  }
  if (out.empty()) throw weft::EngineError(weft::EngineErrc::kUsage, "empty worker list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel HTML/CSS layout engine"};
  app.require_subcommand(1);

  CommonOptions render_common;
  Dumps render_dumps;
  std::string render_page;
  std::string render_out;
  std::string render_raster;
  std::size_t chunk_size = 4096;
  bool verbose = false;
  std::vector<std::string> render_queries;
  CLI::App* render = app.add_subcommand("render", "Render a page to a display list");
  render->add_option("page", render_page, "HTML file")->required()->check(CLI::ExistingFile);
  add_common(render, render_common);
  add_dumps(render, render_dumps);
  render->add_option("--out", render_out, "Write the display list JSON here");
  render->add_option("--raster", render_raster, "Paint into a PPM file");
  render->add_option("--chunk-size", chunk_size, "Code points per input chunk (0: whole file)");
  render->add_option("--query", render_queries, "Print the box of the node at this path");
  render->add_flag("--verbose", verbose, "Print timings, prefetch URLs and diagnostics to stderr");

  CommonOptions bench_common;
  std::vector<std::string> bench_pages;
  std::string bench_workers = "1";
  std::size_t bench_reps = 5;
  std::vector<std::size_t> bench_synthetic;
  CLI::App* bench = app.add_subcommand("bench", "Time style and layout per worker count");
  bench->add_option("pages", bench_pages, "HTML files")->check(CLI::ExistingFile);
  bench->add_option("--css", bench_common.css, "Stylesheet file (repeatable)")->check(CLI::ExistingFile);
  bench->add_option("--workers", bench_workers, "Comma-separated worker counts");
  bench->add_option("--reps", bench_reps, "Timed repetitions per worker count (at least 3)");
  bench->add_option("--parallel-cutoff", bench_common.cutoff, "Subtrees up to this size run sequentially");
  bench->add_option("--viewport", bench_common.viewport, "Viewport width in pixels")->check(CLI::PositiveNumber);
  bench->add_option("--synthetic", bench_synthetic, "Add a synthetic page with this many elements");

  CommonOptions mutate_common;
  Dumps mutate_dumps;
  std::string mutate_page;
  std::string mutate_commands;
  std::string mutate_out;
  std::vector<std::string> mutate_queries;
  bool mutate_verbose = false;
  CLI::App* mutate = app.add_subcommand("mutate", "Apply script commands and relayout incrementally");
  mutate->add_option("page", mutate_page, "HTML file")->required()->check(CLI::ExistingFile);
  mutate->add_option("--commands", mutate_commands, "Command file")->required()->check(CLI::ExistingFile);
  add_common(mutate, mutate_common);
  add_dumps(mutate, mutate_dumps);
  mutate->add_option("--out", mutate_out, "Write the final display list JSON here");
  mutate->add_option("--query", mutate_queries, "Print the box of the node at this path afterwards");
  mutate->add_flag("--verbose", mutate_verbose, "Print timings and diagnostics to stderr");

  weft::SyntheticPageOptions synth_options;
  std::string synth_css_out;
  CLI::App* synth = app.add_subcommand("synth", "Print a synthetic test page");
  synth->add_option("--elements", synth_options.elements, "Number of div elements");
  synth->add_option("--branching", synth_options.branching, "Children per div")->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_options.seed, "Random seed");
  synth->add_flag("--random-shape", synth_options.random_shape, "Random fan-out up to --branching");
  synth->add_option("--css-out", synth_css_out, "Also write the matching stylesheet");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "engine: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*render) {
      weft::RenderRequest request;
      request.html = weft::read_file(render_page);
      request.css_texts = read_all(render_common.css);
      request.layout = layout_options(render_common);
      request.chunk_size = chunk_size;
      request.dump_tokens = render_dumps.tokens;
      request.dump_dom = render_dumps.dom;
      request.dump_style = render_dumps.style;
      request.dump_flow = render_dumps.flow;
      request.dump_layout = render_dumps.layout;
      request.raster = !render_raster.empty();
      request.geometry_queries = render_queries;
      weft::RenderResult result = weft::run_pipeline(request);
      const weft::Snapshot& last = result.snapshots.back();
      if (render_dumps.tokens) std::cout << result.token_dump;
      print_snapshot_dumps(last, render_dumps);
      if (!render_out.empty()) {
        write_file(render_out, last.display_json);
      } else if (!render_dumps.any()) {
        std::cout << last.display_json;
      }
      if (last.ppm) write_file(render_raster, *last.ppm);
      print_geometry(result);
      if (verbose) print_report(result);
    } else if (*bench) {
      if (bench_reps < 3) {
        std::cerr << "engine: --reps must be at least 3\n";
        return kExitUsage;
      }
      std::vector<weft::BenchmarkPage> pages;
      for (const auto& p : bench_pages) pages.push_back({p, weft::read_file(p)});
      std::vector<std::string> css = read_all(bench_common.css);
      for (std::size_t n : bench_synthetic) {
        weft::SyntheticPageOptions o;
        o.elements = n;
        pages.push_back({"synthetic-" + std::to_string(n), weft::synthetic_page(o)});
      }
      if (pages.empty()) {
        std::cerr << "engine: bench needs a page or --synthetic\n";
        return kExitUsage;
      }
      if (!bench_synthetic.empty() && css.empty()) css.push_back(weft::synthetic_stylesheet());
      weft::LayoutOptions base;
      base.viewport_width = bench_common.viewport;
      base.traversal.sequential_cutoff = bench_common.cutoff;
      auto result = weft::run_benchmark(pages, css, parse_worker_list(bench_workers), bench_reps, base);
      std::cout << weft::format_benchmark_tsv(result);
    } else if (*mutate) {
      weft::ParsedScript script = weft::parse_script(weft::read_file(mutate_commands));
      for (const auto& d : script.diagnostics) std::fprintf(stderr, "note\t%s\n", d.c_str());
      weft::RenderRequest request;
      request.html = weft::read_file(mutate_page);
      request.css_texts = read_all(mutate_common.css);
      request.layout = layout_options(mutate_common);
      request.dump_dom = mutate_dumps.dom;
      request.dump_style = mutate_dumps.style;
      request.dump_flow = mutate_dumps.flow;
      request.dump_layout = mutate_dumps.layout || !mutate_dumps.any();
      request.mutations = script.commands;
      request.geometry_queries = mutate_queries;
      weft::RenderResult result = weft::run_pipeline(request);
      Dumps shown = mutate_dumps;
      shown.layout = request.dump_layout;
      for (const auto& s : result.snapshots) {
        std::cout << "== " << (s.label == "load" ? "before" : "after") << " ==\n";
        print_snapshot_dumps(s, shown);
      }
      const auto& after = result.snapshots.back();
      std::cout << "== stats ==\ndirtied_flows " << result.dirtied_flows << "\nrelayout_visits "
                << after.layout_visits << "\nflows " << after.flow_count << "\n";
      print_geometry(result);
      if (!mutate_out.empty()) write_file(mutate_out, after.display_json);
      if (mutate_verbose) print_report(result);
    } else if (*synth) {
      std::cout << weft::synthetic_page(synth_options);
      if (!synth_css_out.empty()) write_file(synth_css_out, weft::synthetic_stylesheet());
    }
  } catch (const weft::EngineError& e) {
    std::cerr << "engine: " << e.what() << "\n";
    return e.code() == weft::EngineErrc::kUsage ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "engine: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
