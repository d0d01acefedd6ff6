#include "weft/engine/benchmark.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"
#include "weft/flow/builder.h"

namespace weft {

namespace {

double time_once(const DomTree& dom, const std::vector<Rule>& rules, const LayoutOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  StyleMap styles = compute_styles(dom, rules, options.traversal);
  double style_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  FlowTree flows = build_flow_tree(dom, styles);
  start = Clock::now();
  layout(flows, options);
  double layout_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return style_ms + layout_ms;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

BenchmarkResult run_benchmark(const std::vector<BenchmarkPage>& pages, const std::vector<std::string>& css_texts,
                              const std::vector<unsigned>& workers, std::size_t repetitions,
                              const LayoutOptions& base) {
  if (repetitions < 3) throw EngineError(EngineErrc::kUsage, "benchmark needs at least 3 repetitions");
  if (workers.empty()) throw EngineError(EngineErrc::kUsage, "benchmark needs at least one worker count");
  for (unsigned w : workers) {
    if (w == 0) throw EngineError(EngineErrc::kUsage, "worker counts must be positive");
  }
  BenchmarkResult result;
  result.workers = workers;
  for (const BenchmarkPage& page : pages) {
    ParsedDocument parsed = parse_document(page.html);
    std::vector<Rule> rules = collect_rules(parsed.tree, css_texts);
    std::vector<BenchmarkCell> row;
    for (unsigned w : workers) {
      LayoutOptions options = base;
      options.traversal.workers = w;
      time_once(parsed.tree, rules, options);  // warm-up
      std::vector<double> samples;
      for (std::size_t r = 0; r < repetitions; ++r) samples.push_back(time_once(parsed.tree, rules, options));
      std::sort(samples.begin(), samples.end());
      std::size_t mid = samples.size() / 2;
      double median = samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
      row.push_back({median, samples.front()});
    }
    result.pages.push_back(page.name);
    result.cells.push_back(std::move(row));
  }
  return result;
}

std::string format_benchmark_tsv(const BenchmarkResult& result) {
  std::string out = "page";
  for (unsigned w : result.workers) {
    out += "\t" + std::to_string(w) + "w_median_ms\t" + std::to_string(w) + "w_min_ms";
  }
  out += '\n';
  for (std::size_t p = 0; p < result.pages.size(); ++p) {
    out += result.pages[p];
    for (const BenchmarkCell& cell : result.cells[p]) out += "\t" + format_ms(cell.median_ms) + "\t" + format_ms(cell.min_ms);
    out += '\n';
  }
  return out;
}

}  // namespace weft
