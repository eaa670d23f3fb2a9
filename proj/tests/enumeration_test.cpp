#include <gtest/gtest.h>

#include "circulant/arithmetic.hpp"
#include "circulant/counting.hpp"
#include "circulant/error.hpp"
#include "oracles.hpp"

namespace circulant {
namespace {

BigCount big(const char* digits) { return BigCount::from_decimal(digits); }

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(72), (std::vector<Natural>{1, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72}));
  EXPECT_EQ(divisors(1), (std::vector<Natural>{1}));
  EXPECT_EQ(divisors(12), (std::vector<Natural>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(49), (std::vector<Natural>{1, 7, 49}));
  EXPECT_THROW((void)divisors(0), DomainError);
}

TEST(Divisors, MatchTrialDivision) {
  for (Natural n = 1; n <= 500; ++n) {
    std::vector<Natural> expected;
    for (Natural d = 1; d <= n; ++d) {
      if (n % d == 0) expected.push_back(d);
    }
    ASSERT_EQ(divisors(n), expected) << n;
  }
}

TEST(Moebius, Examples) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(97), -1);
  EXPECT_THROW((void)moebius(0), DomainError);
}

TEST(Moebius, SumsOverDivisorsVanish) {
  // sum_{d | n} mu(d) = [n == 1] characterizes mu.
  for (Natural n = 1; n <= 2000; ++n) {
    int sum = 0;
    for (Natural d = 1; d <= n; ++d) {
      if (n % d == 0) sum += moebius(d);
    }
    ASSERT_EQ(sum, n == 1 ? 1 : 0) << n;
  }
}

TEST(BigCount, Basics) {
  EXPECT_EQ(BigCount::pow2(71).to_string(), "2361183241434822606848");
  EXPECT_EQ(BigCount::pow2(71).to_grouped_string(), "2,361,183,241,434,822,606,848");
  EXPECT_EQ(BigCount(123).to_grouped_string(), "123");
  EXPECT_EQ(BigCount(5) - BigCount(3), BigCount(2));
  EXPECT_THROW((void)(BigCount(3) - BigCount(5)), DomainError);
  EXPECT_THROW((void)BigCount::from_decimal("12a"), ParseError);
  EXPECT_LT(BigCount(3), BigCount(5));
}

TEST(CountCompositions, Examples) {
  EXPECT_EQ(count_compositions(5), BigCount(16));
  EXPECT_EQ(count_compositions(1), BigCount(1));
  EXPECT_EQ(count_compositions(72), big("2361183241434822606848"));
  EXPECT_THROW((void)count_compositions(0), DomainError);
}

TEST(CountCompositionsKParts, Examples) {
  EXPECT_EQ(count_compositions_k_parts(5, 2), BigCount(4));
  EXPECT_EQ(count_compositions_k_parts(9, 1), BigCount(1));
  EXPECT_EQ(count_compositions_k_parts(8, 3), BigCount(21));
  EXPECT_THROW((void)count_compositions_k_parts(5, 0), DomainError);
  EXPECT_THROW((void)count_compositions_k_parts(5, 6), DomainError);
}

TEST(CountCompositionsKParts, MatchesExhaustiveCount) {
  for (Natural n = 1; n <= 14; ++n) {
    std::vector<std::uint64_t> by_parts(n + 1, 0);
    for (const auto& w : oracle::compositions_by_cuts(n)) ++by_parts[w.size()];
    BigCount row;
    for (Natural k = 1; k <= n; ++k) {
      ASSERT_EQ(count_compositions_k_parts(n, k), BigCount(by_parts[k])) << n << "," << k;
      row += count_compositions_k_parts(n, k);
    }
    ASSERT_EQ(row, count_compositions(n));
  }
}

TEST(CountPrimeCompositions, Examples) {
  EXPECT_EQ(count_prime_compositions(5), BigCount(15));
  EXPECT_EQ(count_prime_compositions(12), BigCount(2010));
  EXPECT_EQ(count_prime_compositions(72), big("2361183241400454481920"));
  EXPECT_EQ(count_prime_compositions(1), BigCount(1));
}

TEST(CountPrimeCompositions, MatchesGcdDynamicProgram) {
  for (Natural n = 1; n <= 72; ++n) {
    ASSERT_EQ(count_prime_compositions(n).value(), oracle::prime_compositions_dp(n)) << n;
  }
}

TEST(CountDisconnected, Examples) {
  EXPECT_EQ(count_disconnected_compositions(10), BigCount(17));
  EXPECT_EQ(count_disconnected_compositions(8), BigCount(8));
  EXPECT_EQ(count_disconnected_compositions(72), BigCount(34368124928ULL));
  EXPECT_EQ(count_disconnected_compositions(1), BigCount(0));
}

TEST(CountDisconnected, EqualsProperDivisorSum) {
  for (Natural n = 1; n <= 100; ++n) {
    BigCount sum;
    for (const Natural d : divisors(n)) {
      if (d != n) sum += count_prime_compositions(d);
    }
    ASSERT_EQ(count_disconnected_compositions(n), sum) << n;
    ASSERT_EQ(count_prime_compositions(n) + count_disconnected_compositions(n), count_compositions(n));
  }
}

TEST(CountDisconnected, ValuesWherePublishedTableIsOff) {
  // Independent DP oracle: 2^(n-1) minus the gcd-1 compositions.
  for (const Natural n : {28U, 30U, 36U, 40U}) {
    const auto expected = oracle::pow2(n - 1) - oracle::prime_compositions_dp(n);
    EXPECT_EQ(count_disconnected_compositions(n).value(), expected) << n;
  }
  EXPECT_EQ(count_disconnected_compositions(28), BigCount(8198));
  EXPECT_EQ(count_disconnected_compositions(30), BigCount(16907));
  EXPECT_EQ(count_disconnected_compositions(36), BigCount(133088));
  EXPECT_EQ(count_disconnected_compositions(40), BigCount(524408));
}

TEST(CountPalindromes, Examples) {
  EXPECT_EQ(count_palindromes(8), BigCount(16));
  EXPECT_EQ(count_palindromes(2), BigCount(2));
  EXPECT_EQ(count_palindromes(9), BigCount(16));
  EXPECT_EQ(count_palindromes(1), BigCount(1));
}

TEST(CountAperiodicPalindromes, Examples) {
  EXPECT_EQ(count_aperiodic_palindromes(8), BigCount(12));
  EXPECT_EQ(count_aperiodic_palindromes(4), BigCount(2));
  EXPECT_EQ(count_aperiodic_palindromes(2), BigCount(1));
  EXPECT_THROW((void)count_aperiodic_palindromes(1), DomainError);
}

TEST(CountAperiodicPalindromes, MatchesBruteForce) {
  for (Natural n = 2; n <= 18; ++n) {
    std::uint64_t count = 0;
    for (const auto& w : oracle::compositions_by_cuts(n)) {
      if (oracle::is_palindrome(w) && oracle::primitive_root_length(w) == w.size()) ++count;
    }
    ASSERT_EQ(count_aperiodic_palindromes(n), BigCount(count)) << n;
  }
}

TEST(CountTable, RowsAreConsistent) {
  const CountTable table = count_table(40);
  ASSERT_EQ(table.size(), 40U);
  EXPECT_FALSE(table[0].aperiodic_palindromes.has_value());
  for (const auto& row : table) {
    EXPECT_EQ(row.prime_compositions + row.disconnected, row.total_compositions);
    EXPECT_EQ(row.total_compositions, BigCount::pow2(row.n - 1));
  }
  EXPECT_EQ(table[14].prime_compositions, BigCount(16365));
  EXPECT_EQ(table[14].disconnected, BigCount(19));
  EXPECT_EQ(table[23].prime_compositions, BigCount(8386440));
  EXPECT_EQ(*table[7].aperiodic_palindromes, BigCount(12));
}

TEST(MoebiusInversion, PrimeCountsSumToAllCompositions) {
  for (Natural n = 1; n <= 64; ++n) {
    BigCount sum;
    for (const Natural d : divisors(n)) sum += count_prime_compositions(d);
    ASSERT_EQ(sum, BigCount::pow2(n - 1)) << n;
  }
}

}  // namespace
}  // namespace circulant
