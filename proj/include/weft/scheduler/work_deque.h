#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <type_traits>
#include <vector>

namespace weft {

// Dynamic circular-array work-stealing deque (Chase-Lev, with the C11
// memory-order placement of Le, Pop, Cohen and Zappa Nardelli). The owner
// pushes and pops at the bottom; any thread may steal from the top.
//
// Grown rings are retired rather than freed so a thief still reading an old
// ring never touches released memory; they are reclaimed with the deque.
template <typename T>
class WorkDeque {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  explicit WorkDeque(std::int64_t initial_capacity = 64) {
    std::int64_t capacity = 1;
    while (capacity < initial_capacity) capacity <<= 1;
    rings_.push_back(std::make_unique<Ring>(capacity));
    ring_.store(rings_.back().get(), std::memory_order_relaxed);
  }

  WorkDeque(const WorkDeque&) = delete;
  WorkDeque& operator=(const WorkDeque&) = delete;

  // Owner only.
  void push(T item) {
    std::int64_t b = bottom_.load(std::memory_order_relaxed);
    std::int64_t t = top_.load(std::memory_order_acquire);
    Ring* ring = ring_.load(std::memory_order_relaxed);
    if (b - t > ring->capacity - 1) ring = grow(ring, t, b);
    ring->put(b, item);
    std::atomic_thread_fence(std::memory_order_release);
    bottom_.store(b + 1, std::memory_order_relaxed);
  }

  // Owner only. Takes the most recently pushed item.
  std::optional<T> pop() {
    std::int64_t b = bottom_.load(std::memory_order_relaxed) - 1;
    Ring* ring = ring_.load(std::memory_order_relaxed);
    bottom_.store(b, std::memory_order_relaxed);
    std::atomic_thread_fence(std::memory_order_seq_cst);
    std::int64_t t = top_.load(std::memory_order_relaxed);
    if (t > b) {
      bottom_.store(b + 1, std::memory_order_relaxed);
      return std::nullopt;
    }
    T item = ring->get(b);
    if (t == b) {
      // Last element: race against thieves for it.
      bool won = top_.compare_exchange_strong(t, t + 1, std::memory_order_seq_cst,
                                              std::memory_order_relaxed);
      bottom_.store(b + 1, std::memory_order_relaxed);
      if (!won) return std::nullopt;
    }
    return item;
  }

  // Any thread. Takes the oldest item; nullopt when empty or when another
  // thread won the race for the top slot.
  std::optional<T> steal() {
    std::int64_t t = top_.load(std::memory_order_acquire);
    std::atomic_thread_fence(std::memory_order_seq_cst);
    std::int64_t b = bottom_.load(std::memory_order_acquire);
    if (t >= b) return std::nullopt;
    Ring* ring = ring_.load(std::memory_order_acquire);
    T item = ring->get(t);
    if (!top_.compare_exchange_strong(t, t + 1, std::memory_order_seq_cst,
                                      std::memory_order_relaxed)) {
      return std::nullopt;
    }
    return item;
  }

  // Approximate when other threads are active.
  std::int64_t size() const {
    std::int64_t b = bottom_.load(std::memory_order_relaxed);
    std::int64_t t = top_.load(std::memory_order_relaxed);
    return b > t ? b - t : 0;
  }

  bool empty() const { return size() == 0; }

 private:
  struct Ring {
    explicit Ring(std::int64_t cap)
        : capacity(cap), mask(cap - 1), slots(new std::atomic<T>[static_cast<std::size_t>(cap)]) {}

    T get(std::int64_t index) const {
      return slots[static_cast<std::size_t>(index & mask)].load(std::memory_order_relaxed);
    }
    void put(std::int64_t index, T item) {
      slots[static_cast<std::size_t>(index & mask)].store(item, std::memory_order_relaxed);
    }

    std::int64_t capacity;
    std::int64_t mask;
    std::unique_ptr<std::atomic<T>[]> slots;
  };

  Ring* grow(Ring* old, std::int64_t top, std::int64_t bottom) {
    auto fresh = std::make_unique<Ring>(old->capacity * 2);
    for (std::int64_t i = top; i < bottom; ++i) fresh->put(i, old->get(i));
    Ring* raw = fresh.get();
    rings_.push_back(std::move(fresh));
    ring_.store(raw, std::memory_order_release);
    return raw;
  }

  alignas(64) std::atomic<std::int64_t> top_{0};
  alignas(64) std::atomic<std::int64_t> bottom_{0};
  alignas(64) std::atomic<Ring*> ring_{nullptr};
  std::vector<std::unique_ptr<Ring>> rings_;  // owner only
};

}  // namespace weft
