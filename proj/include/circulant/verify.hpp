#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circulant/composition.hpp"
#include "circulant/connection_set.hpp"

namespace circulant {

/// Deliberate defects a verification run can be asked to carry, to show
/// that the suites detect them.
enum class Fault {
  kNone,
  /// Replace gcd(nonzero members, n) by the literal gcd of the members.
  kLiteralGcd,
};

struct VerifyOptions {
  /// When set, every suite runs up to exactly this n instead of its default.
  std::optional<Natural> max_n;
  unsigned workers = 1;
  Fault fault = Fault::kNone;
};

struct SuiteResult {
  std::string name;
  Natural bound = 0;
  bool passed = true;
  std::uint64_t instances = 0;
  /// First failing instance, empty when passed.
  std::string counterexample;
};

struct SuiteSpec {
  std::string name;
  Natural default_bound;
  std::function<SuiteResult(Natural bound, Fault fault)> run;
};

/// Every exhaustive invariant suite, in report order.
[[nodiscard]] const std::vector<SuiteSpec>& verification_suites();

/// Runs all suites, sharding them over options.workers threads.  Results
/// come back in report order regardless of scheduling.
[[nodiscard]] std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// "PASS name n<=14 instances=..." or "FAIL name n<=14 ...: counterexample".
[[nodiscard]] std::string format_result(const SuiteResult& r);

/// Calls visit(c) for every composition of n (recursive generation, so it
/// does not go through psi).
void for_each_composition(Natural n, const std::function<void(const Composition&)>& visit);

}  // namespace circulant
