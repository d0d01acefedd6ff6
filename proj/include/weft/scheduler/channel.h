#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace weft {

namespace channel_detail {

template <typename T>
struct State {
  std::mutex mutex;
  std::condition_variable ready;
  std::deque<T> queue;
  std::size_t senders = 0;
  bool receiver_alive = true;
};

}  // namespace channel_detail

template <typename T>
class Receiver;

// Writer end of an unbounded multiple-writer, single-reader channel. Copies
// share the channel; the receiver sees Closed once every copy is gone.
template <typename T>
class Sender {
 public:
  Sender(const Sender& other) : state_(other.state_) { attach(); }
  Sender(Sender&& other) noexcept : state_(std::move(other.state_)) {}

  Sender& operator=(const Sender& other) {
    if (this != &other) {
      detach();
      state_ = other.state_;
      attach();
    }
    return *this;
  }

  Sender& operator=(Sender&& other) noexcept {
    if (this != &other) {
      detach();
      state_ = std::move(other.state_);
    }
    return *this;
  }

  ~Sender() { detach(); }

  // Never blocks. Returns false when the receiver has been dropped.
  [[nodiscard]] bool send(T message) const {
    {
      std::lock_guard lock(state_->mutex);
      if (!state_->receiver_alive) return false;
      state_->queue.push_back(std::move(message));
    }
    state_->ready.notify_one();
    return true;
  }

 private:
  template <typename U>
  friend std::pair<Sender<U>, Receiver<U>> make_channel();

  explicit Sender(std::shared_ptr<channel_detail::State<T>> state)
      : state_(std::move(state)) {
    attach();
  }

  void attach() {
    if (!state_) return;
    std::lock_guard lock(state_->mutex);
    ++state_->senders;
  }

  void detach() {
    if (!state_) return;
    bool closed = false;
    {
      std::lock_guard lock(state_->mutex);
      closed = --state_->senders == 0;
    }
    if (closed) state_->ready.notify_all();
    state_.reset();
  }

  std::shared_ptr<channel_detail::State<T>> state_;
};

// Reader end. Move-only, so there is exactly one reader per channel.
template <typename T>
class Receiver {
 public:
  Receiver(const Receiver&) = delete;
  Receiver& operator=(const Receiver&) = delete;
  Receiver(Receiver&& other) noexcept = default;
  Receiver& operator=(Receiver&& other) noexcept {
    if (this != &other) {
      release();
      state_ = std::move(other.state_);
    }
    return *this;
  }

  ~Receiver() { release(); }

  // Blocks until a message arrives. nullopt means Closed: the queue is empty
  // and no sender remains.
  std::optional<T> recv() {
    std::unique_lock lock(state_->mutex);
    state_->ready.wait(lock, [&] { return !state_->queue.empty() || state_->senders == 0; });
    return pop_locked();
  }

  // Like recv(), but also gives up after timeout. A timeout is reported as
  // nullopt with closed() still false.
  template <typename Rep, typename Period>
  std::optional<T> recv_for(std::chrono::duration<Rep, Period> timeout) {
    std::unique_lock lock(state_->mutex);
    state_->ready.wait_for(lock, timeout, [&] {
      return !state_->queue.empty() || state_->senders == 0;
    });
    return pop_locked();
  }

  std::optional<T> try_recv() {
    std::lock_guard lock(state_->mutex);
    return pop_locked();
  }

  bool closed() const {
    std::lock_guard lock(state_->mutex);
    return state_->queue.empty() && state_->senders == 0;
  }

 private:
  template <typename U>
  friend std::pair<Sender<U>, Receiver<U>> make_channel();

  explicit Receiver(std::shared_ptr<channel_detail::State<T>> state)
      : state_(std::move(state)) {}

  std::optional<T> pop_locked() {
    if (state_->queue.empty()) return std::nullopt;
    T message = std::move(state_->queue.front());
    state_->queue.pop_front();
    return message;
  }

  void release() {
    if (!state_) return;
    std::lock_guard lock(state_->mutex);
    state_->receiver_alive = false;
    state_->queue.clear();
  }

  std::shared_ptr<channel_detail::State<T>> state_;
};

template <typename T>
std::pair<Sender<T>, Receiver<T>> make_channel() {
  auto state = std::make_shared<channel_detail::State<T>>();
  return {Sender<T>(state), Receiver<T>(state)};
}

}  // namespace weft
