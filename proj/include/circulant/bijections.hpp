#pragma once

#include "circulant/composition.hpp"
#include "circulant/connection_set.hpp"

namespace circulant {

/// Connection set -> composition of its cyclic gaps:
/// omega_i = a_{i+1} - a_i and omega_t = n - a_t.  {0} maps to the single
/// part n.  Bijective between connection sets of Z_n with t members and
/// compositions of n with t parts.
[[nodiscard]] Composition psi(const ConnectionSet& s);

/// Composition -> its prefix-sum set {0, s_1, s_1 + s_2, ...} over Z_total.
[[nodiscard]] ConnectionSet psi_inv(const Composition& c);

/// psi restricted to symmetric sets; the image is always a palindrome.
/// Throws DomainError for a non-symmetric set.
[[nodiscard]] Composition psi_palindrome(const ConnectionSet& s);

/// Aperiodic palindrome of n >= 2 -> symmetric connection set generating
/// Z_n.  gcd 1 words map through psi_inv directly; words with gcd d != 1
/// map through psi_inv(nu(word)).
[[nodiscard]] ConnectionSet tau(const Composition& c);

/// Inverse of tau.  Writes psi(s) = block^r with block aperiodic and
/// returns the block with every part multiplied by r.
[[nodiscard]] Composition tau_inv(const ConnectionSet& s);

}  // namespace circulant
