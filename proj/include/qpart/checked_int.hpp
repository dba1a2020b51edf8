#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qpart {

/// Raised when an exact computation leaves the range of its coefficient type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
///
/// This is the default coefficient type for series and counters. Every
/// identity checked by this library is an exact integer statement, so a
/// wrapped coefficient would silently turn a failure into a pass (or the
/// reverse). Code that needs unbounded range can instantiate the series
/// templates with boost::multiprecision::cpp_int instead.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of a numeric type

  [[nodiscard]] constexpr std::int64_t value() const { return value_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw OverflowError("CheckedInt: addition overflow");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r)) throw OverflowError("CheckedInt: subtraction overflow");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw OverflowError("CheckedInt: multiplication overflow");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt{0} - *this; }

  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt v) { return os << v.value_; }

 private:
  std::int64_t value_ = 0;
};

inline std::string to_string(CheckedInt v) { return std::to_string(v.value()); }

}  // namespace qpart
