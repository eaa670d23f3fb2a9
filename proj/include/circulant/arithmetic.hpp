#pragma once

#include <vector>

#include "circulant/composition.hpp"

namespace circulant {

/// Positive divisors of n in ascending order.  Throws DomainError for n = 0.
[[nodiscard]] std::vector<Natural> divisors(Natural n);

/// Moebius function by trial division: 0 if a squared prime divides m,
/// otherwise (-1)^(number of prime factors).  Throws DomainError for m = 0.
[[nodiscard]] int moebius(Natural m);

}  // namespace circulant
