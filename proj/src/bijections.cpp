#include "circulant/bijections.hpp"

#include "circulant/error.hpp"

namespace circulant {

Composition psi(const ConnectionSet& s) {
  const auto a = s.elements();
  std::vector<Natural> gaps;
  gaps.reserve(a.size());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) gaps.push_back(a[i + 1] - a[i]);
  gaps.push_back(s.modulus() - a.back());
  return Composition(std::move(gaps));
}

ConnectionSet psi_inv(const Composition& c) {
  std::vector<Natural> prefix;
  prefix.reserve(c.size());
  Natural running = 0;
  for (const Natural part : c.parts()) {
    prefix.push_back(running);
    running += part;
  }
  return connection_set_from_sorted(c.total(), std::move(prefix));
}

Composition psi_palindrome(const ConnectionSet& s) {
  if (!is_symmetric(s)) {
    throw DomainError("connection set " + to_string(s) + " is not symmetric");
  }
  return psi(s);
}

ConnectionSet tau(const Composition& c) {
  if (c.total() < 2) throw DomainError("tau is defined for n >= 2");
  if (!is_palindrome(c)) throw DomainError("tau requires a palindrome; got " + to_comma_string(c));
  if (!is_aperiodic(c)) {
    throw DomainError("tau requires an aperiodic palindrome; got " + to_comma_string(c));
  }
  if (gcd_of(c) == 1) return psi_inv(c);
  return psi_inv(nu(c));
}

Composition tau_inv(const ConnectionSet& s) {
  if (s.modulus() < 2) throw DomainError("tau_inv is defined for n >= 2");
  if (!is_symmetric(s)) throw DomainError("connection set " + to_string(s) + " is not symmetric");
  if (!is_connected_gcd(s)) {
    throw DomainError("connection set " + to_string(s) + " does not generate Z_n (disconnected)");
  }
  Composition word = psi(s);
  if (is_aperiodic(word)) return word;
  const std::size_t p = period(word);
  const Natural r = word.size() / p;
  std::vector<Natural> scaled;
  scaled.reserve(p);
  for (std::size_t i = 0; i < p; ++i) scaled.push_back(word[i] * r);
  return Composition(std::move(scaled));
}

}  // namespace circulant
