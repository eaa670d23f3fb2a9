#include "circulant/connection_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "circulant/error.hpp"
#include "text_util.hpp"

namespace circulant {

bool ConnectionSet::contains(Natural a) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

ConnectionSet ConnectionSet::from_mask(Natural n, std::span<const std::uint64_t> words) {
  if (n < 1) throw DomainError("modulus must be at least 1");
  std::vector<Natural> elements{0};
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const auto b = static_cast<Natural>(std::countr_zero(bits));
      const Natural member = w * 64 + b + 1;
      if (member >= n) throw DomainError("mask bit outside 1..n-1");
      elements.push_back(member);
      bits &= bits - 1;
    }
  }
  return ConnectionSet(n, std::move(elements));
}

ConnectionSet make_connection_set(Natural n, std::span<const std::int64_t> members) {
  if (n < 1) throw DomainError("modulus must be at least 1");
  const auto modulus = static_cast<std::int64_t>(n);
  std::vector<Natural> elements;
  elements.reserve(members.size());
  for (const std::int64_t a : members) {
    elements.push_back(static_cast<Natural>(((a % modulus) + modulus) % modulus));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) {
    throw DomainError("connection set must contain 0");
  }
  return ConnectionSet(n, std::move(elements));
}

ConnectionSet make_connection_set(Natural n, std::initializer_list<std::int64_t> members) {
  return make_connection_set(n, std::span<const std::int64_t>(members.begin(), members.size()));
}

ConnectionSet connection_set_from_sorted(Natural n, std::vector<Natural> elements) {
  assert(!elements.empty() && elements.front() == 0);
  assert(std::adjacent_find(elements.begin(), elements.end(), std::greater_equal<>()) ==
         elements.end());
  assert(elements.back() < n);
  return ConnectionSet(n, std::move(elements));
}

ConnectionSet inverse_set(const ConnectionSet& s) {
  const Natural n = s.modulus();
  const auto e = s.elements();
  std::vector<Natural> out{0};
  out.reserve(e.size());
  // n - a over the nonzero members, taken in reverse, is already ascending.
  for (auto it = e.rbegin(); it != e.rend() && *it != 0; ++it) out.push_back(n - *it);
  return connection_set_from_sorted(n, std::move(out));
}

bool is_symmetric(const ConnectionSet& s) noexcept {
  const Natural n = s.modulus();
  const auto e = s.elements();
  const std::size_t t = e.size();
  // 0-based form of a_i + a_{t+2-i} = n for i = 2..t.
  for (std::size_t i = 1; i < t; ++i) {
    if (e[i] + e[t - i] != n) return false;
  }
  return true;
}

Natural gcd_of_set(const ConnectionSet& s) noexcept {
  Natural g = s.modulus();
  for (const Natural a : s.elements()) g = std::gcd(g, a);
  return g;
}

Natural literal_gcd_of_set(const ConnectionSet& s) noexcept {
  Natural g = 0;
  for (const Natural a : s.elements()) g = std::gcd(g, a);
  return g;
}

bool is_connected_gcd(const ConnectionSet& s) noexcept { return gcd_of_set(s) == 1; }

std::string to_string(const ConnectionSet& s) {
  std::string out = std::to_string(s.modulus()) + ":";
  const auto e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += std::to_string(e[i]);
  }
  return out;
}

ConnectionSet parse_connection_set(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("connection set must look like 'n: a_1,a_2,...'");
  }
  const auto n = detail::parse_integer<Natural>(text.substr(0, colon), "modulus");
  const auto members = detail::parse_integer_list<std::int64_t>(text.substr(colon + 1), "member");
  return make_connection_set(n, members);
}

}  // namespace circulant
