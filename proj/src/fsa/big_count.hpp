// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fslat::fsa {

// Exact non-negative reading count. Sentence lattices routinely exceed
// 10^60 paths, so nothing here is allowed to overflow.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static BigCount fromString(const std::string& decimal) { return BigCount(Int(decimal)); }
  static BigCount power(std::uint64_t base, unsigned exponent) { return BigCount(boost::multiprecision::pow(Int(base), exponent)); }

  BigCount& operator+=(const BigCount& other) { value_ += other.value_; return *this; }
  BigCount& operator*=(const BigCount& other) { value_ *= other.value_; return *this; }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool isZero() const { return value_.is_zero(); }
  std::string toString() const { return value_.str(); }
  double toDouble() const { return value_.convert_to<double>(); }
  // Number of decimal digits; 1 for zero.
  std::size_t digits() const { return toString().size(); }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.value_; }

 private:
  using Int = boost::multiprecision::cpp_int;
  explicit BigCount(Int value) : value_(std::move(value)) {}

  Int value_;
};

}  // namespace fslat::fsa
