#include <benchmark/benchmark.h>

#include <map>

#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"
#include "weft/engine/synthetic.h"
#include "weft/flow/builder.h"
#include "weft/layout/layout.h"

namespace {

struct Input {
  weft::DomTree dom;
  weft::StyleMap styles;
};

const Input& input(std::size_t elements) {
  static std::map<std::size_t, Input> cache;
  auto it = cache.find(elements);
  if (it == cache.end()) {
    weft::SyntheticPageOptions o;
    o.elements = elements;
    Input in{weft::parse_document(weft::synthetic_page(o)).tree, {}};
    std::vector<std::string> css{weft::synthetic_stylesheet()};
    in.styles = weft::compute_styles(in.dom, weft::collect_rules(in.dom, css));
    it = cache.emplace(elements, std::move(in)).first;
  }
  return it->second;
}

void BM_LayoutSerial(benchmark::State& state) {
  const Input& in = input(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    weft::FlowTree flows = weft::build_flow_tree(in.dom, in.styles);
    state.ResumeTiming();
    weft::layout_serial(flows, weft::kDefaultViewportWidth);
    benchmark::DoNotOptimize(flows);
  }
}

void BM_LayoutParallel(benchmark::State& state) {
  const Input& in = input(state.range(0));
  weft::LayoutOptions options;
  options.traversal.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    weft::FlowTree flows = weft::build_flow_tree(in.dom, in.styles);
    state.ResumeTiming();
    weft::layout(flows, options);
    benchmark::DoNotOptimize(flows);
  }
}

}  // namespace

BENCHMARK(BM_LayoutSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayoutParallel)
    ->ArgsProduct({{1000, 10000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
