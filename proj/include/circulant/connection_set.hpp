#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/composition.hpp"

namespace circulant {

/// A subset of Z_n that contains 0, kept in canonical form
/// 0 = a_1 < a_2 < ... < a_t < n.
class ConnectionSet {
 public:
  [[nodiscard]] Natural modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::span<const Natural> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool contains(Natural a) const noexcept;

  /// Set whose nonzero members are {b + 1 : bit b of the mask is set}.
  /// The mask is little-endian over 64-bit words and must describe exactly
  /// the n - 1 candidates 1..n-1 (higher bits must be clear).
  [[nodiscard]] static ConnectionSet from_mask(Natural n, std::span<const std::uint64_t> words);

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  friend ConnectionSet make_connection_set(Natural, std::span<const std::int64_t>);
  friend ConnectionSet connection_set_from_sorted(Natural, std::vector<Natural>);
  ConnectionSet(Natural n, std::vector<Natural> elements)
      : modulus_(n), elements_(std::move(elements)) {}

  Natural modulus_ = 1;
  std::vector<Natural> elements_;
};

/// Reduces members mod n, sorts, removes duplicates.  Throws DomainError
/// for n < 1 or when 0 is not a member after reduction.
[[nodiscard]] ConnectionSet make_connection_set(Natural n, std::span<const std::int64_t> members);
[[nodiscard]] ConnectionSet make_connection_set(Natural n, std::initializer_list<std::int64_t> members);

/// Internal fast path: elements must already be canonical (checked in
/// debug builds only).
[[nodiscard]] ConnectionSet connection_set_from_sorted(Natural n, std::vector<Natural> elements);

/// {(n - a) mod n : a in set}.
[[nodiscard]] ConnectionSet inverse_set(const ConnectionSet& s);

/// True iff the set equals its inverse, i.e. a_i + a_{t+2-i} = n for i >= 2.
[[nodiscard]] bool is_symmetric(const ConnectionSet& s) noexcept;

/// gcd of the nonzero members together with the modulus (n for {0}).
[[nodiscard]] Natural gcd_of_set(const ConnectionSet& s) noexcept;

/// gcd of the members taken literally, without adjoining the modulus
/// (gcd{0} = 0).  This is NOT a connectivity criterion: {0,3} in Z_8 has
/// literal gcd 3 but generates Z_8.  Kept for fault-injection runs.
[[nodiscard]] Natural literal_gcd_of_set(const ConnectionSet& s) noexcept;

/// The set generates Z_n, i.e. gcd_of_set(s) == 1.  Always true for n = 1.
[[nodiscard]] bool is_connected_gcd(const ConnectionSet& s) noexcept;

/// "n: a_1,a_2,...".
[[nodiscard]] std::string to_string(const ConnectionSet& s);

/// Parses "n: a_1,a_2,...".  Throws ParseError, or DomainError when the
/// members do not form a connection set.
[[nodiscard]] ConnectionSet parse_connection_set(std::string_view text);

}  // namespace circulant
