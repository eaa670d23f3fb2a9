#include "circulant/verify.hpp"

#include <gtest/gtest.h>

#include "circulant/circulant_graph.hpp"

namespace circulant {
namespace {

TEST(Verify, DefaultRunPasses) {
  const auto results = run_verification({});
  ASSERT_EQ(results.size(), verification_suites().size());
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << format_result(r);
    EXPECT_GT(r.instances, 0U) << r.name;
  }
  EXPECT_EQ(results[1].name, "psi-round-trip");
  EXPECT_EQ(results[1].bound, 14U);
}

TEST(Verify, WorkersDoNotChangeTheReport) {
  VerifyOptions one;
  one.max_n = 9;
  VerifyOptions many = one;
  many.workers = 4;
  const auto a = run_verification(one);
  const auto b = run_verification(many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(format_result(a[i]), format_result(b[i]));
}

TEST(Verify, TinyUniverse) {
  VerifyOptions options;
  options.max_n = 2;
  for (const auto& r : run_verification(options)) EXPECT_TRUE(r.passed) << format_result(r);
}

TEST(Verify, LiteralGcdFaultIsCaught) {
  VerifyOptions options;
  options.max_n = 8;
  options.fault = Fault::kLiteralGcd;
  const auto results = run_verification(options);
  const auto connectivity = std::find_if(results.begin(), results.end(),
                                         [](const auto& r) { return r.name == "connectivity-oracle"; });
  ASSERT_NE(connectivity, results.end());
  EXPECT_FALSE(connectivity->passed);
  EXPECT_NE(connectivity->counterexample.find("n=3, set {0,2}"), std::string::npos)
      << connectivity->counterexample;
  EXPECT_EQ(format_result(*connectivity).rfind("FAIL connectivity-oracle", 0), 0U);
}

TEST(Verify, LiteralGcdMisjudgesZeroThreeModEight) {
  const auto s = make_connection_set(8, {0, 3});
  EXPECT_NE(literal_gcd_of_set(s), 1U);
  EXPECT_TRUE(is_connected_bfs(build_digraph(s)));
  EXPECT_TRUE(is_connected_gcd(s));
}

TEST(Verify, RecursiveCompositionGenerator) {
  std::vector<std::string> seen;
  for_each_composition(3, [&](const Composition& c) { seen.push_back(to_comma_string(c)); });
  EXPECT_EQ(seen, (std::vector<std::string>{"1,1,1", "1,2", "2,1", "3"}));
}

}  // namespace
}  // namespace circulant
