#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <new>
#include <string>
#include <type_traits>
#include <utility>

#include "weft/base/error.h"

namespace weft {

enum class SmallBufferErrc { kIndexOutOfRange };
using SmallBufferError = CodedError<SmallBufferErrc>;

// A sequence that stores up to InlineCapacity elements in place and moves
// to heap storage on the first push past that. Once spilled it stays on the
// heap, so is_inline() is true only for buffers that never grew beyond the
// inline slots.
template <typename T, std::size_t InlineCapacity = 4>
class SmallBuffer {
  static_assert(InlineCapacity > 0);

 public:
  using value_type = T;
  using size_type = std::size_t;
  using iterator = T*;
  using const_iterator = const T*;

  SmallBuffer() noexcept = default;

  SmallBuffer(std::initializer_list<T> items) {
    for (const T& item : items) push_back(item);
  }

  SmallBuffer(const SmallBuffer& other) {
    if (!other.is_inline()) grow_to(other.capacity_);
    for (const T& item : other) push_back(item);
  }

  SmallBuffer(SmallBuffer&& other) noexcept(
      std::is_nothrow_move_constructible_v<T>) {
    take(std::move(other));
  }

  SmallBuffer& operator=(const SmallBuffer& other) {
    if (this != &other) {
      SmallBuffer copy(other);
      clear_and_release();
      take(std::move(copy));
    }
    return *this;
  }

  SmallBuffer& operator=(SmallBuffer&& other) noexcept(
      std::is_nothrow_move_constructible_v<T>) {
    if (this != &other) {
      clear_and_release();
      take(std::move(other));
    }
    return *this;
  }

  ~SmallBuffer() { clear_and_release(); }

  void push_back(const T& item) { emplace_back(item); }
  void push_back(T&& item) { emplace_back(std::move(item)); }

  template <typename... Args>
  T& emplace_back(Args&&... args) {
    if (size_ == capacity_) grow_to(capacity_ * 2);
    T* slot = data() + size_;
    ::new (static_cast<void*>(slot)) T(std::forward<Args>(args)...);
    ++size_;
    return *slot;
  }

  void pop_back() {
    if (size_ == 0) throw SmallBufferError(SmallBufferErrc::kIndexOutOfRange, "pop_back on empty SmallBuffer");
    --size_;
    std::destroy_at(data() + size_);
  }

  T& at(size_type index) {
    check(index);
    return data()[index];
  }
  const T& at(size_type index) const {
    check(index);
    return data()[index];
  }

  T& operator[](size_type index) { return data()[index]; }
  const T& operator[](size_type index) const { return data()[index]; }

  T& back() { return data()[size_ - 1]; }
  const T& back() const { return data()[size_ - 1]; }

  void clear() noexcept {
    std::destroy_n(data(), size_);
    size_ = 0;
  }

  size_type size() const noexcept { return size_; }
  size_type capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return size_ == 0; }
  bool is_inline() const noexcept { return heap_ == nullptr; }

  T* data() noexcept { return heap_ ? heap_ : inline_data(); }
  const T* data() const noexcept { return heap_ ? heap_ : inline_data(); }

  iterator begin() noexcept { return data(); }
  iterator end() noexcept { return data() + size_; }
  const_iterator begin() const noexcept { return data(); }
  const_iterator end() const noexcept { return data() + size_; }

  friend bool operator==(const SmallBuffer& a, const SmallBuffer& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  T* inline_data() noexcept { return std::launder(reinterpret_cast<T*>(inline_)); }
  const T* inline_data() const noexcept {
    return std::launder(reinterpret_cast<const T*>(inline_));
  }

  void check(size_type index) const {
    if (index >= size_) {
      throw SmallBufferError(SmallBufferErrc::kIndexOutOfRange,
                             "SmallBuffer index " + std::to_string(index) +
                                 " out of range (size " + std::to_string(size_) + ")");
    }
  }

  void grow_to(size_type new_capacity) {
    T* fresh = std::allocator<T>().allocate(new_capacity);
    std::uninitialized_move_n(data(), size_, fresh);
    std::destroy_n(data(), size_);
    if (heap_) std::allocator<T>().deallocate(heap_, capacity_);
    heap_ = fresh;
    capacity_ = new_capacity;
  }

  void clear_and_release() noexcept {
    clear();
    if (heap_) {
      std::allocator<T>().deallocate(heap_, capacity_);
      heap_ = nullptr;
    }
    capacity_ = InlineCapacity;
  }

  void take(SmallBuffer&& other) {
    if (other.heap_) {
      heap_ = std::exchange(other.heap_, nullptr);
      capacity_ = std::exchange(other.capacity_, InlineCapacity);
      size_ = std::exchange(other.size_, 0);
      return;
    }
    std::uninitialized_move_n(other.inline_data(), other.size_, inline_data());
    size_ = other.size_;
    other.clear();
  }

  alignas(T) std::byte inline_[sizeof(T) * InlineCapacity];
  T* heap_ = nullptr;
  size_type size_ = 0;
  size_type capacity_ = InlineCapacity;
};

}  // namespace weft
