#include "circulant/big_count.hpp"

#include <algorithm>

#include "circulant/error.hpp"

namespace circulant {

BigCount::BigCount(Integer v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("BigCount cannot be negative");
}

BigCount BigCount::pow2(std::uint64_t exponent) {
  Integer v = 1;
  v <<= exponent;
  return BigCount(std::move(v));
}

BigCount BigCount::from_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("not a decimal numeral: '" + std::string(text) + "'");
  }
  return BigCount(Integer(std::string(text)));
}

std::string BigCount::to_grouped_string() const {
  const std::string digits = to_string();
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

BigCount operator-(const BigCount& a, const BigCount& b) {
  if (a.value_ < b.value_) throw DomainError("BigCount subtraction underflow");
  return BigCount(BigCount::Integer(a.value_ - b.value_));
}

}  // namespace circulant
