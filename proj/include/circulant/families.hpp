#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circulant/big_count.hpp"
#include "circulant/composition.hpp"
#include "circulant/connection_set.hpp"

namespace circulant {

enum class Family {
  kCompositions,
  kPrimeCompositions,
  kDisconnected,
  kPalindromes,
  kAperiodicPalindromes,
  kConnectionSets,
  kSymmetricConnectionSets,
};

/// Accepts "prime-compositions" and "prime_compositions" alike.
/// Throws ParseError on an unknown name.
[[nodiscard]] Family parse_family(std::string_view name);
[[nodiscard]] std::string family_name(Family f);

/// Smallest n for which the family is defined (2 for aperiodic palindromes).
[[nodiscard]] Natural family_min_n(Family f) noexcept;

/// Closed-form size of the family.
[[nodiscard]] BigCount count_family(Family f, Natural n);

using Member = std::variant<Composition, ConnectionSet>;

[[nodiscard]] std::string to_string(const Member& m);

namespace detail {
class SetSource;
}

/// Sequential, single-consumer stream over one family.
///
/// Members come out in ascending order of the (n-1)-bit mask of the
/// connection set minus {0} (bit b <-> element b+1); composition families
/// are the psi images of those sets.  Symmetric and disconnected families
/// are generated directly in that order rather than filtered out of all
/// 2^(n-1) masks, so a limited listing stays cheap for large n.
class FamilyStream {
 public:
  FamilyStream(Natural n, Family family);
  FamilyStream(FamilyStream&&) noexcept;
  FamilyStream& operator=(FamilyStream&&) noexcept;
  ~FamilyStream();

  [[nodiscard]] std::optional<Member> next();
  [[nodiscard]] Natural n() const noexcept { return n_; }
  [[nodiscard]] Family family() const noexcept { return family_; }

 private:
  Natural n_;
  Family family_;
  std::unique_ptr<detail::SetSource> source_;
};

/// Throws DomainError when n is below the family's minimum.
[[nodiscard]] FamilyStream iter_family(Natural n, Family family);

}  // namespace circulant
