#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "weft/base/error.h"
#include "weft/scheduler/tree_shape.h"

namespace weft {

enum class TraversalDirection { kTopDown, kBottomUp };

enum class SchedulerErrc { kPanicPropagated, kBadOptions };
using SchedulerError = CodedError<SchedulerErrc>;

inline constexpr std::size_t kDefaultParallelCutoff = 16;

struct TraversalOptions {
  unsigned workers = 1;
  // Subtrees with at most this many nodes run sequentially on one worker.
  std::size_t sequential_cutoff = kDefaultParallelCutoff;
};

struct TraversalStats {
  std::vector<std::size_t> visits_per_worker;
  std::size_t steals = 0;

  std::size_t visits() const;
};

using VisitFn = std::function<void(std::uint32_t node)>;
using IncludeFn = std::function<bool(std::uint32_t node)>;

// Visits every node of `shape` once, ordered by `direction`:
//   kTopDown  - a node strictly before any of its descendants;
//   kBottomUp - a node strictly after all of its descendants.
//
// `include`, when set, restricts the walk:
//   kTopDown  - evaluated for a node only after its parent was visited; a
//               node that fails it is skipped together with its subtree.
//   kBottomUp - evaluated up front for every node; the accepted set must be
//               closed under taking parents (it forms a rooted subtree).
//
// If a visit throws, remaining work is abandoned, workers are joined, and a
// SchedulerError(kPanicPropagated) carrying the first failure is thrown.
TraversalStats execute_traversal(const TreeShape& shape, TraversalDirection direction,
                                 const VisitFn& visit, const TraversalOptions& options,
                                 const IncludeFn& include = {});

// Physical core count where /proc/cpuinfo exposes it, else logical count.
unsigned physical_core_count();
unsigned logical_core_count();

}  // namespace weft
