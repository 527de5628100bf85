#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace strategem {

// Unbounded integer atom, the "Int" leaf of every traversable datatype.
class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT
  Integer(int value) : value_(value) {}   // NOLINT

  // Decimal digits with an optional leading '-'. Throws std::invalid_argument.
  static Integer from_string(std::string_view text);

  std::string to_string() const { return value_.get_str(10); }
  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const { return value_.get_si(); }

  friend Integer operator+(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ + b.value_));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ - b.value_));
  }
  friend bool operator==(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  explicit Integer(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_;
};

}  // namespace strategem
