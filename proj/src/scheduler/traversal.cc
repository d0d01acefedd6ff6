#include "weft/scheduler/traversal.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "weft/scheduler/work_deque.h"

namespace weft {

std::size_t TraversalStats::visits() const {
  return std::accumulate(visits_per_worker.begin(), visits_per_worker.end(), std::size_t{0});
}

namespace {

constexpr std::uint32_t kNone = TreeShape::kNoParent;

// Idle workers block here after spinning through their steal rounds.
class Parker {
 public:
  template <typename Done>
  void park(Done done) {
    sleepers_.fetch_add(1, std::memory_order_seq_cst);
    {
      std::unique_lock lock(mutex_);
      std::uint64_t seen = epoch_;
      wake_.wait_for(lock, std::chrono::microseconds(500),
                     [&] { return epoch_ != seen || done(); });
    }
    sleepers_.fetch_sub(1, std::memory_order_seq_cst);
  }

  void wake_if_sleeping() {
    if (sleepers_.load(std::memory_order_seq_cst) > 0) wake_all();
  }

  void wake_all() {
    {
      std::lock_guard lock(mutex_);
      ++epoch_;
    }
    wake_.notify_all();
  }

 private:
  std::atomic<unsigned> sleepers_{0};
  std::mutex mutex_;
  std::condition_variable wake_;
  std::uint64_t epoch_ = 0;
};

struct alignas(64) WorkerCounters {
  std::size_t visits = 0;
  std::size_t steals = 0;
};

class TraversalRun {
 public:
  TraversalRun(const TreeShape& shape, TraversalDirection direction, const VisitFn& visit,
               const TraversalOptions& options, const IncludeFn& include)
      : shape_(shape),
        direction_(direction),
        visit_(visit),
        include_(include),
        workers_(options.workers),
        cutoff_(options.sequential_cutoff),
        counters_(options.workers) {
    for (unsigned w = 0; w < workers_; ++w) deques_.push_back(std::make_unique<WorkDeque<std::uint32_t>>());
  }

  TraversalStats run() {
    bool has_work = direction_ == TraversalDirection::kTopDown ? seed_top_down() : seed_bottom_up();
    if (has_work) {
      std::vector<std::thread> threads;
      threads.reserve(workers_ - 1);
      for (unsigned w = 1; w < workers_; ++w) threads.emplace_back([this, w] { worker_loop(w); });
      worker_loop(0);
      for (auto& t : threads) t.join();
    }
    if (failure_) {
      throw SchedulerError(SchedulerErrc::kPanicPropagated,
                           "traversal visit failed: " + failure_message_);
    }
    TraversalStats stats;
    for (const auto& c : counters_) {
      stats.visits_per_worker.push_back(c.visits);
      stats.steals += c.steals;
    }
    return stats;
  }

 private:
  bool seed_top_down() {
    if (shape_.empty()) return false;
    if (include_ && !include_(shape_.root())) return false;
    outstanding_.store(1, std::memory_order_relaxed);
    deques_[0]->push(shape_.root());
    return true;
  }

  bool seed_bottom_up() {
    const std::size_t n = shape_.size();
    if (n == 0) return false;
    included_.assign(n, 1);
    if (include_) {
      for (std::size_t i = 0; i < n; ++i) included_[i] = include_(static_cast<std::uint32_t>(i)) ? 1 : 0;
    }
    included_size_.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      if (!included_[i]) continue;
      std::uint32_t p = shape_.parent(static_cast<std::uint32_t>(i));
      if (p != kNone && !included_[p]) {
        throw SchedulerError(SchedulerErrc::kBadOptions,
                             "bottom-up include set is not closed under parents");
      }
      ++included_size_[i];
      if (p != kNone) included_size_[p] += included_size_[i];
    }

    pending_ = std::make_unique<std::atomic<std::uint32_t>[]>(n);
    std::vector<std::uint32_t> seeds;
    std::int64_t units = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!included_[i]) continue;
      auto node = static_cast<std::uint32_t>(i);
      std::uint32_t p = shape_.parent(node);
      if (included_size_[i] <= cutoff_) {
        if (p == kNone || included_size_[p] > cutoff_) {
          seeds.push_back(node);
          ++units;
        }
        continue;
      }
      std::uint32_t waiting = 0;
      for (std::uint32_t c : shape_.children(node)) waiting += included_[c];
      pending_[i].store(waiting, std::memory_order_relaxed);
      ++units;
      if (waiting == 0) seeds.push_back(node);
    }
    if (units == 0) return false;
    outstanding_.store(units, std::memory_order_relaxed);
    for (std::size_t k = 0; k < seeds.size(); ++k) deques_[k % workers_]->push(seeds[k]);
    return true;
  }

  void worker_loop(unsigned self) {
    std::minstd_rand rng(self * 7919u + 17u);
    unsigned failed_rounds = 0;
    while (!abort_.load(std::memory_order_acquire)) {
      std::optional<std::uint32_t> task = deques_[self]->pop();
      if (!task) task = steal_round(self, rng);
      if (task) {
        failed_rounds = 0;
        run_task(self, *task);
        continue;
      }
      if (outstanding_.load(std::memory_order_acquire) == 0) break;
      if (++failed_rounds >= 2 * workers_) {
        parker_.park([this] {
          return outstanding_.load(std::memory_order_acquire) == 0 ||
                 abort_.load(std::memory_order_acquire);
        });
        failed_rounds = 0;
      }
    }
  }

  std::optional<std::uint32_t> steal_round(unsigned self, std::minstd_rand& rng) {
    if (workers_ < 2) return std::nullopt;
    std::uniform_int_distribution<unsigned> pick(0, workers_ - 2);
    for (unsigned attempt = 0; attempt + 1 < workers_; ++attempt) {
      unsigned victim = pick(rng);
      if (victim >= self) ++victim;
      if (auto task = deques_[victim]->steal()) {
        ++counters_[self].steals;
        return task;
      }
    }
    return std::nullopt;
  }

  void run_task(unsigned self, std::uint32_t node) {
    try {
      if (direction_ == TraversalDirection::kTopDown) {
        run_top_down(self, node);
      } else {
        run_bottom_up(self, node);
      }
    } catch (const std::exception& e) {
      record_failure(e.what());
    } catch (...) {
      record_failure("unknown exception");
    }
    if (outstanding_.fetch_sub(1, std::memory_order_acq_rel) == 1) parker_.wake_all();
  }

  void visit(unsigned self, std::uint32_t node) {
    visit_(node);
    ++counters_[self].visits;
  }

  void run_top_down(unsigned self, std::uint32_t node) {
    if (shape_.subtree_size(node) <= cutoff_) {
      std::vector<std::uint32_t> stack{node};
      while (!stack.empty()) {
        std::uint32_t current = stack.back();
        stack.pop_back();
        visit(self, current);
        auto children = shape_.children(current);
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
          if (!include_ || include_(*it)) stack.push_back(*it);
        }
      }
      return;
    }
    visit(self, node);
    bool pushed = false;
    auto children = shape_.children(node);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      if (include_ && !include_(*it)) continue;
      outstanding_.fetch_add(1, std::memory_order_relaxed);
      deques_[self]->push(*it);
      pushed = true;
    }
    if (pushed) parker_.wake_if_sleeping();
  }

  void run_bottom_up(unsigned self, std::uint32_t node) {
    if (included_size_[node] <= cutoff_) {
      // Post-order over the included part of this subtree.
      std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{node, 0}};
      while (!stack.empty()) {
        auto& [current, next_child] = stack.back();
        auto children = shape_.children(current);
        if (next_child < children.size()) {
          std::uint32_t child = children[next_child++];
          if (included_[child]) stack.emplace_back(child, 0);
          continue;
        }
        visit(self, current);
        stack.pop_back();
      }
    } else {
      visit(self, node);
    }
    std::uint32_t parent = shape_.parent(node);
    if (parent != kNone && pending_[parent].fetch_sub(1, std::memory_order_acq_rel) == 1) {
      deques_[self]->push(parent);
      parker_.wake_if_sleeping();
    }
  }

  void record_failure(const std::string& message) {
    {
      std::lock_guard lock(failure_mutex_);
      if (!failure_) {
        failure_ = true;
        failure_message_ = message;
      }
    }
    abort_.store(true, std::memory_order_release);
    parker_.wake_all();
  }

  const TreeShape& shape_;
  TraversalDirection direction_;
  const VisitFn& visit_;
  const IncludeFn& include_;
  unsigned workers_;
  std::size_t cutoff_;

  std::vector<std::unique_ptr<WorkDeque<std::uint32_t>>> deques_;
  std::vector<WorkerCounters> counters_;
  std::vector<char> included_;
  std::vector<std::uint32_t> included_size_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> pending_;

  std::atomic<std::int64_t> outstanding_{0};
  std::atomic<bool> abort_{false};
  Parker parker_;

  std::mutex failure_mutex_;
  bool failure_ = false;
  std::string failure_message_;
};

}  // namespace

TraversalStats execute_traversal(const TreeShape& shape, TraversalDirection direction,
                                 const VisitFn& visit, const TraversalOptions& options,
                                 const IncludeFn& include) {
  if (options.workers == 0) {
    throw SchedulerError(SchedulerErrc::kBadOptions, "workers must be at least 1");
  }
  TraversalRun run(shape, direction, visit, options, include);
  return run.run();
}

unsigned logical_core_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

unsigned physical_core_count() {
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::set<std::pair<std::string, std::string>> cores;
  std::string line;
  std::string physical_id = "0";
  while (std::getline(cpuinfo, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, line.find_last_not_of(" \t", colon - 1) + 1);
    std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : "";
    if (key == "physical id") physical_id = value;
    if (key == "core id") cores.emplace(physical_id, value);
  }
  if (cores.empty()) return logical_core_count();
  return static_cast<unsigned>(cores.size());
}

}  // namespace weft
