#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weft/layout/layout.h"

namespace weft {

struct BenchmarkPage {
  std::string name;
  std::string html;
};

struct BenchmarkCell {
  double median_ms = 0;
  double min_ms = 0;
};

struct BenchmarkResult {
  std::vector<unsigned> workers;
  std::vector<std::string> pages;
  std::vector<std::vector<BenchmarkCell>> cells;  // [page][worker column]
};

// Times style resolution plus the three layout traversals (flow
// construction in between is not timed) for each worker count, after one
// warm-up run. Throws EngineError(kUsage) if repetitions < 3 or no worker
// counts are given.
BenchmarkResult run_benchmark(const std::vector<BenchmarkPage>& pages, const std::vector<std::string>& css_texts,
                              const std::vector<unsigned>& workers, std::size_t repetitions,
                              const LayoutOptions& base);

// Header "page" then "<n>w_median_ms" and "<n>w_min_ms" per worker count.
std::string format_benchmark_tsv(const BenchmarkResult& result);

}  // namespace weft
