#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/error.hpp"

namespace circulant::detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_integer(std::string_view token, std::string_view what) {
  token = trim(token);
  Int value{};
  const auto* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

template <typename Int>
std::vector<Int> parse_integer_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  text = trim(text);
  if (text.empty()) throw ParseError("empty " + std::string(what) + " list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_integer<Int>(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace circulant::detail
