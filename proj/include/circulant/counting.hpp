#pragma once

#include <optional>
#include <vector>

#include "circulant/big_count.hpp"
#include "circulant/composition.hpp"

namespace circulant {

// All counts are exact.  Every function throws DomainError for n = 0.

/// 2^(n-1): compositions of n, equivalently connection sets of Z_n.
[[nodiscard]] BigCount count_compositions(Natural n);

/// binom(n-1, k-1); throws DomainError unless 1 <= k <= n.
[[nodiscard]] BigCount count_compositions_k_parts(Natural n, Natural k);

/// sum_{d | n} mu(n/d) 2^(d-1): compositions with gcd 1, equivalently
/// connected circulant digraphs of order n.
[[nodiscard]] BigCount count_prime_compositions(Natural n);

/// 2^(n-1) minus the prime count (compositions with gcd > 1).
[[nodiscard]] BigCount count_disconnected_compositions(Natural n);

/// 2^floor(n/2), with count_palindromes(1) = 1.
[[nodiscard]] BigCount count_palindromes(Natural n);

/// sum_{d | n} mu(n/d) (2^floor(d/2) - 1): aperiodic palindromes of n,
/// equivalently connected circulant graphs.  Throws DomainError for n < 2.
[[nodiscard]] BigCount count_aperiodic_palindromes(Natural n);

struct CountRow {
  Natural n = 0;
  BigCount total_compositions;
  BigCount prime_compositions;
  BigCount disconnected;
  BigCount palindromes;
  std::optional<BigCount> aperiodic_palindromes;  // undefined at n = 1
};

using CountTable = std::vector<CountRow>;

[[nodiscard]] CountRow count_row(Natural n);
/// Rows for n = 1..max_n.
[[nodiscard]] CountTable count_table(Natural max_n);

}  // namespace circulant
