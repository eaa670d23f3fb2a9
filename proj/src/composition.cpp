#include "circulant/composition.hpp"

#include <algorithm>
#include <numeric>

#include "circulant/error.hpp"
#include "text_util.hpp"

namespace circulant {

Composition::Composition(std::vector<Natural> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a composition has at least one part");
  for (const Natural p : parts_) {
    if (p == 0) throw DomainError("composition parts must be positive");
    total_ += p;
  }
}

Composition reverse(const Composition& c) {
  return Composition(std::vector<Natural>(c.parts().rbegin(), c.parts().rend()));
}

bool is_palindrome(const Composition& c) noexcept {
  const auto p = c.parts();
  return std::equal(p.begin(), p.begin() + p.size() / 2, p.rbegin());
}

Natural gcd_of(const Composition& c) noexcept {
  Natural g = 0;
  for (const Natural p : c.parts()) g = std::gcd(g, p);
  return g;
}

std::size_t period(const Composition& c) noexcept {
  const auto w = c.parts();
  const std::size_t m = w.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool matches = true;
    for (std::size_t i = p; i < m && matches; ++i) matches = w[i] == w[i - p];
    if (matches) return p;
  }
  return m;
}

bool is_aperiodic(const Composition& c) noexcept { return period(c) == c.size(); }

Composition repeat(const Composition& block, std::size_t r) {
  if (r == 0) throw DomainError("repetition count must be at least 1");
  std::vector<Natural> out;
  out.reserve(block.size() * r);
  for (std::size_t k = 0; k < r; ++k) {
    out.insert(out.end(), block.parts().begin(), block.parts().end());
  }
  return Composition(std::move(out));
}

Composition nu(const Composition& c) {
  const Natural d = gcd_of(c);
  if (d == 1) throw DomainError("nu is only defined for compositions with gcd != 1");
  std::vector<Natural> block;
  block.reserve(c.size());
  for (const Natural p : c.parts()) block.push_back(p / d);
  return repeat(Composition(std::move(block)), static_cast<std::size_t>(d));
}

std::string to_comma_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::string to_string(const Composition& c) {
  const bool single_digits =
      std::all_of(c.parts().begin(), c.parts().end(), [](Natural p) { return p < 10; });
  if (!single_digits) return to_comma_string(c);
  std::string out;
  for (const Natural p : c.parts()) out += static_cast<char>('0' + p);
  return out;
}

namespace {

Composition checked(std::vector<Natural> parts) {
  for (const Natural p : parts) {
    if (p == 0) throw ParseError("composition parts must be positive");
  }
  return Composition(std::move(parts));
}

}  // namespace

Composition parse_comma_composition(std::string_view text) {
  return checked(detail::parse_integer_list<Natural>(text, "composition part"));
}

Composition parse_composition(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.find(',') != std::string_view::npos || body.empty()) {
    return parse_comma_composition(body);
  }
  std::vector<Natural> parts;
  for (const char ch : body) {
    if (ch < '0' || ch > '9') {
      throw ParseError("invalid character in digit-string composition: '" +
                       std::string(body) + "'");
    }
    parts.push_back(static_cast<Natural>(ch - '0'));
  }
  return checked(std::move(parts));
}

}  // namespace circulant
