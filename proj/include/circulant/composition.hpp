#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

using Natural = std::uint64_t;

/// An ordered word of positive integers ("parts").  The total n is the sum
/// of the parts; a composition with m parts is a word of length m.
///
/// Values are immutable once built.  Every constructor validates: the word
/// is non-empty and every part is at least 1.
class Composition {
 public:
  explicit Composition(std::vector<Natural> parts);
  Composition(std::initializer_list<Natural> parts)
      : Composition(std::vector<Natural>(parts)) {}

  [[nodiscard]] std::span<const Natural> parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
  [[nodiscard]] Natural operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] Natural total() const noexcept { return total_; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<Natural> parts_;
  Natural total_ = 0;
};

[[nodiscard]] inline Natural total(const Composition& c) noexcept { return c.total(); }

/// sigma_m ... sigma_2 sigma_1.
[[nodiscard]] Composition reverse(const Composition& c);

[[nodiscard]] bool is_palindrome(const Composition& c) noexcept;

/// gcd of all parts; always divides the total.
[[nodiscard]] Natural gcd_of(const Composition& c) noexcept;

/// Smallest p dividing the part count such that c is a power of its
/// length-p prefix.  One-part compositions have period 1.
[[nodiscard]] std::size_t period(const Composition& c) noexcept;

[[nodiscard]] bool is_aperiodic(const Composition& c) noexcept;

/// r-fold concatenation of block.  Throws DomainError for r == 0.
[[nodiscard]] Composition repeat(const Composition& block, std::size_t r);

/// Divides each part by d = gcd_of(c) and repeats the result d times.
/// Only defined for d != 1; throws DomainError otherwise.
[[nodiscard]] Composition nu(const Composition& c);

/// Canonical text: parts juxtaposed ("212") when every part is a single
/// digit, otherwise comma separated ("3,5,12").
[[nodiscard]] std::string to_string(const Composition& c);

/// Always comma separated ("2,1,2").
[[nodiscard]] std::string to_comma_string(const Composition& c);

/// Accepts the comma form, or a comma-free digit string read one part per
/// digit ("212" is 2,1,2).  Throws ParseError.
[[nodiscard]] Composition parse_composition(std::string_view text);

/// Accepts only the comma form; a comma-free token is a single part
/// ("12" is the one-part composition 12).  Throws ParseError.
[[nodiscard]] Composition parse_comma_composition(std::string_view text);

}  // namespace circulant
