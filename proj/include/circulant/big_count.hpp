#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace circulant {

/// Exact nonnegative integer for counting results.
class BigCount {
 public:
  using Integer = boost::multiprecision::cpp_int;

  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError for a negative value.
  explicit BigCount(Integer v);

  [[nodiscard]] static BigCount pow2(std::uint64_t exponent);
  /// Throws ParseError unless text is a plain decimal numeral.
  [[nodiscard]] static BigCount from_decimal(std::string_view text);

  [[nodiscard]] const Integer& value() const noexcept { return value_; }
  [[nodiscard]] std::string to_string() const { return value_.str(); }
  /// Decimal with thousands separators ("23,611,832,...").
  [[nodiscard]] std::string to_grouped_string() const;

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  /// Throws DomainError if the result would be negative.
  friend BigCount operator-(const BigCount& a, const BigCount& b);
  friend BigCount operator*(const BigCount& a, const BigCount& b) {
    return BigCount(Integer(a.value_ * b.value_));
  }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ < b.value_    ? std::strong_ordering::less
           : a.value_ == b.value_ ? std::strong_ordering::equal
                                  : std::strong_ordering::greater;
  }
  friend std::ostream& operator<<(std::ostream& os, const BigCount& c) {
    return os << c.to_string();
  }

 private:
  Integer value_ = 0;
};

}  // namespace circulant
