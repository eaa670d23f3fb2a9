#include "circulant/families.hpp"

#include <algorithm>
#include <array>
#include <span>

#include "circulant/bijections.hpp"
#include "circulant/counting.hpp"
#include "circulant/error.hpp"

namespace circulant {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 7> kFamilies{{
    {Family::kCompositions, "compositions"},
    {Family::kPrimeCompositions, "prime-compositions"},
    {Family::kDisconnected, "disconnected"},
    {Family::kPalindromes, "palindromes"},
    {Family::kAperiodicPalindromes, "aperiodic-palindromes"},
    {Family::kConnectionSets, "connection-sets"},
    {Family::kSymmetricConnectionSets, "symmetric-connection-sets"},
}};

bool matches(Family f, const Composition& word) {
  switch (f) {
    case Family::kPrimeCompositions:
      return gcd_of(word) == 1;
    case Family::kDisconnected:
      return gcd_of(word) != 1;
    case Family::kPalindromes:
      return is_palindrome(word);
    case Family::kAperiodicPalindromes:
      return is_palindrome(word) && is_aperiodic(word);
    default:
      return true;
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '_', '-');
  for (const auto& info : kFamilies) {
    if (info.name == normalized) return info.family;
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return std::string(info.name);
  }
  return "?";
}

Natural family_min_n(Family f) noexcept { return f == Family::kAperiodicPalindromes ? 2 : 1; }

BigCount count_family(Family f, Natural n) {
  switch (f) {
    case Family::kCompositions:
    case Family::kConnectionSets:
      return count_compositions(n);
    case Family::kPrimeCompositions:
      return count_prime_compositions(n);
    case Family::kDisconnected:
      return count_disconnected_compositions(n);
    case Family::kPalindromes:
    case Family::kSymmetricConnectionSets:
      return count_palindromes(n);
    case Family::kAperiodicPalindromes:
      return count_aperiodic_palindromes(n);
  }
  throw DomainError("unknown family");
}

std::string to_string(const Member& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Composition>) {
          return to_comma_string(v);
        } else {
          return to_string(v);
        }
      },
      m);
}

namespace detail {

/// Produces connection sets of Z_n in ascending mask order.
class SetSource {
 public:
  virtual ~SetSource() = default;
  virtual std::optional<ConnectionSet> next() = 0;
};

}  // namespace detail

namespace {

/// Little-endian binary counter over a fixed number of bits.
class BitCounter {
 public:
  explicit BitCounter(Natural bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
  [[nodiscard]] bool test(Natural bit) const noexcept { return (words_[bit / 64] >> (bit % 64)) & 1U; }

  /// False once the counter wraps past 2^bits - 1.
  bool increment() {
    bool carry = true;
    for (auto& word : words_) {
      if (++word != 0) {
        carry = false;
        break;
      }
    }
    if (carry) return false;
    const Natural top_word = bits_ / 64;
    return top_word >= words_.size() || (words_[top_word] >> (bits_ % 64)) == 0;
  }

 private:
  Natural bits_;
  std::vector<std::uint64_t> words_;
};

/// Every subset of Z_n containing 0.
class AllSets final : public detail::SetSource {
 public:
  explicit AllSets(Natural n) : n_(n), counter_(n - 1) {}

  std::optional<ConnectionSet> next() override {
    if (done_) return std::nullopt;
    ConnectionSet s = ConnectionSet::from_mask(n_, counter_.words());
    done_ = !counter_.increment();
    return s;
  }

 private:
  Natural n_;
  BitCounter counter_;
  bool done_ = false;
};

/// Sets with S = -S.  A symmetric set is fixed by its members in 1..n/2;
/// element 1 decides the top mask bit (n-1), so counting with element 1 as
/// the most significant bit walks the full masks in ascending order.
class SymmetricSets final : public detail::SetSource {
 public:
  explicit SymmetricSets(Natural n) : n_(n), half_(n / 2), counter_(n / 2) {}

  std::optional<ConnectionSet> next() override {
    if (done_) return std::nullopt;
    std::vector<Natural> low;
    for (Natural bit = 0; bit < half_; ++bit) {
      if (counter_.test(bit)) low.push_back(half_ - bit);
    }
    std::sort(low.begin(), low.end());
    std::vector<Natural> elements{0};
    elements.insert(elements.end(), low.begin(), low.end());
    for (auto it = low.rbegin(); it != low.rend(); ++it) {
      if (n_ - *it != *it) elements.push_back(n_ - *it);
    }
    done_ = !counter_.increment();
    return connection_set_from_sorted(n_, std::move(elements));
  }

 private:
  Natural n_;
  Natural half_;
  BitCounter counter_;
  bool done_ = false;
};

/// Mask order: the set holding the largest element of the symmetric
/// difference has the larger mask.
bool mask_less(const ConnectionSet& a, const ConnectionSet& b) {
  const auto x = a.elements();
  const auto y = b.elements();
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j) {
    if (*i != *j) return *i < *j;
  }
  return i == x.rend() && j != y.rend();
}

/// Sets inside pZ_n for some prime p | n, i.e. gcd(S, n) > 1.  Merges one
/// ascending stream per prime divisor, dropping sets reached twice.
class DisconnectedSets final : public detail::SetSource {
 public:
  explicit DisconnectedSets(Natural n) : n_(n) {
    Natural rest = n;
    for (Natural p = 2; p <= rest; ++p) {
      if (rest % p != 0) continue;
      while (rest % p == 0) rest /= p;
      lanes_.push_back(Lane{p, BitCounter(n / p - 1), std::nullopt});
      advance(lanes_.back());
    }
  }

  std::optional<ConnectionSet> next() override {
    const Lane* best = nullptr;
    for (const auto& lane : lanes_) {
      if (lane.current && (best == nullptr || mask_less(*lane.current, *best->current))) best = &lane;
    }
    if (best == nullptr) return std::nullopt;
    ConnectionSet out = *best->current;
    for (auto& lane : lanes_) {
      if (lane.current && *lane.current == out) advance(lane);
    }
    return out;
  }

 private:
  struct Lane {
    Natural step;
    BitCounter counter;
    std::optional<ConnectionSet> current;
    bool done = false;
  };

  void advance(Lane& lane) {
    if (lane.done) {
      lane.current.reset();
      return;
    }
    std::vector<Natural> elements{0};
    for (Natural bit = 0; bit + 1 < n_ / lane.step; ++bit) {
      if (lane.counter.test(bit)) elements.push_back(lane.step * (bit + 1));
    }
    lane.current = connection_set_from_sorted(n_, std::move(elements));
    lane.done = !lane.counter.increment();
  }

  Natural n_;
  std::vector<Lane> lanes_;
};

}  // namespace

FamilyStream::FamilyStream(Natural n, Family family) : n_(n), family_(family) {
  if (n < family_min_n(family)) {
    throw DomainError(family_name(family) + " is defined for n >= " +
                      std::to_string(family_min_n(family)));
  }
  switch (family) {
    case Family::kPalindromes:
    case Family::kAperiodicPalindromes:
    case Family::kSymmetricConnectionSets:
      source_ = std::make_unique<SymmetricSets>(n);
      break;
    case Family::kDisconnected:
      source_ = std::make_unique<DisconnectedSets>(n);
      break;
    default:
      source_ = std::make_unique<AllSets>(n);
      break;
  }
}

FamilyStream::FamilyStream(FamilyStream&&) noexcept = default;
FamilyStream& FamilyStream::operator=(FamilyStream&&) noexcept = default;
FamilyStream::~FamilyStream() = default;

std::optional<Member> FamilyStream::next() {
  while (auto set = source_->next()) {
    if (family_ == Family::kConnectionSets || family_ == Family::kSymmetricConnectionSets) {
      return std::move(*set);
    }
    // Composition families re-check their defining predicate on the word.
    Composition word = psi(*set);
    if (matches(family_, word)) return word;
  }
  return std::nullopt;
}

FamilyStream iter_family(Natural n, Family family) { return FamilyStream(n, family); }

}  // namespace circulant
