#include "circulant/arithmetic.hpp"

#include <algorithm>

#include "circulant/error.hpp"

namespace circulant {

std::vector<Natural> divisors(Natural n) {
  if (n == 0) throw DomainError("divisors: n must be positive");
  std::vector<Natural> small;
  std::vector<Natural> large;
  for (Natural d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(Natural m) {
  if (m == 0) throw DomainError("moebius: m must be positive");
  int sign = 1;
  for (Natural p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

}  // namespace circulant
