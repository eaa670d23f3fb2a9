#include "circulant/counting.hpp"

#include "circulant/arithmetic.hpp"
#include "circulant/error.hpp"

namespace circulant {

namespace {

using Integer = BigCount::Integer;

void require_positive(Natural n) {
  if (n == 0) throw DomainError("n must be at least 1");
}

Integer pow2(Natural e) {
  Integer v = 1;
  v <<= e;
  return v;
}

/// sum_{d | n} mu(n/d) f(d)
template <typename F>
BigCount moebius_sum(Natural n, F f) {
  Integer sum = 0;
  for (const Natural d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) sum += f(d);
    if (mu == -1) sum -= f(d);
  }
  return BigCount(std::move(sum));
}

}  // namespace

BigCount count_compositions(Natural n) {
  require_positive(n);
  return BigCount::pow2(n - 1);
}

BigCount count_compositions_k_parts(Natural n, Natural k) {
  require_positive(n);
  if (k < 1 || k > n) throw DomainError("part count k must lie in [1, n]");
  // binom(n-1, j) by the multiplicative formula; each partial product is exact.
  const Natural top = n - 1;
  Natural j = k - 1;
  if (j > top - j) j = top - j;
  Integer v = 1;
  for (Natural i = 1; i <= j; ++i) {
    v *= top - j + i;
    v /= i;
  }
  return BigCount(std::move(v));
}

BigCount count_prime_compositions(Natural n) {
  require_positive(n);
  return moebius_sum(n, [](Natural d) { return pow2(d - 1); });
}

BigCount count_disconnected_compositions(Natural n) {
  return count_compositions(n) - count_prime_compositions(n);
}

BigCount count_palindromes(Natural n) {
  require_positive(n);
  return BigCount::pow2(n / 2);
}

BigCount count_aperiodic_palindromes(Natural n) {
  if (n < 2) throw DomainError("aperiodic palindrome count is defined for n >= 2");
  return moebius_sum(n, [](Natural d) { return Integer(pow2(d / 2) - 1); });
}

CountRow count_row(Natural n) {
  CountRow row;
  row.n = n;
  row.total_compositions = count_compositions(n);
  row.prime_compositions = count_prime_compositions(n);
  row.disconnected = row.total_compositions - row.prime_compositions;
  row.palindromes = count_palindromes(n);
  if (n >= 2) row.aperiodic_palindromes = count_aperiodic_palindromes(n);
  return row;
}

CountTable count_table(Natural max_n) {
  require_positive(max_n);
  CountTable table;
  table.reserve(max_n);
  for (Natural n = 1; n <= max_n; ++n) table.push_back(count_row(n));
  return table;
}

}  // namespace circulant
