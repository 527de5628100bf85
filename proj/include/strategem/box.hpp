#pragma once

#include <memory>
#include <utility>

namespace strategem {

// Immutable, shared, never-null indirection for recursive datatype fields.
// Generic traversal sees through a Box: a `Box<Expr>` field is a child of
// type Expr.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}  // NOLINT
  explicit Box(std::shared_ptr<const T> ptr) : ptr_(std::move(ptr)) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T& get() const { return *ptr_; }
  const std::shared_ptr<const T>& shared() const { return ptr_; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

template <class T>
struct is_box : std::false_type {};
template <class T>
struct is_box<Box<T>> : std::true_type {};

template <class T>
struct unbox {
  using type = T;
};
template <class T>
struct unbox<Box<T>> {
  using type = T;
};
template <class T>
using unbox_t = typename unbox<T>::type;

}  // namespace strategem
