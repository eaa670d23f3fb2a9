#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "circulant/families.hpp"
#include "commands.hpp"

namespace circulant::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(CliCount, Examples) {
  EXPECT_EQ(cli({"count", "prime-compositions", "12"}).out, "2010\n");
  EXPECT_EQ(cli({"count", "palindromes", "8"}).out, "16\n");
  EXPECT_EQ(cli({"count", "aperiodic-palindromes", "8"}).out, "12\n");
  EXPECT_EQ(cli({"count", "compositions", "72"}).out, "2361183241434822606848\n");
  EXPECT_EQ(cli({"count", "disconnected", "1"}).out, "0\n");
}

TEST(CliCount, Errors) {
  const auto unknown = cli({"count", "partitions", "5"});
  EXPECT_EQ(unknown.status, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown family"), std::string::npos);
  EXPECT_EQ(cli({"count", "aperiodic-palindromes", "1"}).status, kExitUsage);
  EXPECT_EQ(cli({"count", "compositions", "0"}).status, kExitUsage);
  EXPECT_EQ(cli({"count", "compositions", "x"}).status, kExitUsage);
  EXPECT_EQ(cli({"count", "connection-sets", "4"}).status, kExitUsage);
  EXPECT_EQ(cli({"count"}).status, kExitUsage);
  EXPECT_EQ(cli({}).status, kExitUsage);
}

TEST(CliList, TruncatesWithMarker) {
  const auto r = cli({"list", "compositions", "5", "--limit", "3"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "5\n1,4\n2,3\n…truncated\n");
}

TEST(CliList, NoMarkerWhenLimitNotReached) {
  EXPECT_EQ(cli({"list", "aperiodic-palindromes", "4"}).out, "4\n1,2,1\n");
  EXPECT_EQ(cli({"list", "aperiodic-palindromes", "4", "--limit", "2"}).out, "4\n1,2,1\n");
  EXPECT_EQ(cli({"list", "compositions", "1"}).out, "1\n");
}

TEST(CliList, Json) {
  const auto r = cli({"list", "symmetric-connection-sets", "8", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 16U);
  EXPECT_EQ(doc[0], nlohmann::json::array({0}));
  EXPECT_EQ(doc[1], nlohmann::json::array({0, 4}));

  const auto truncated = cli({"list", "compositions", "5", "--format", "json", "--limit", "2"});
  EXPECT_EQ(nlohmann::json::parse(truncated.out), nlohmann::json::parse("[[5],[1,4]]"));
  EXPECT_EQ(truncated.err, "…truncated\n");
}

TEST(CliList, Errors) {
  EXPECT_EQ(cli({"list", "compositions", "5", "--limit", "0"}).status, kExitUsage);
  EXPECT_EQ(cli({"list", "compositions", "5", "--format", "xml"}).status, kExitUsage);
}

TEST(CliConvert, Examples) {
  EXPECT_EQ(cli({"convert", "to-set", "2,1,2"}).out, "5: 0,2,3\n");
  EXPECT_EQ(cli({"convert", "tau", "2,4,2"}).out, "8: 0,1,3,4,5,7\n");
  EXPECT_EQ(cli({"convert", "tau-inv", "8:", "0,1,7"}).out, "1,6,1\n");
  EXPECT_EQ(cli({"convert", "tau-inv", "8: 0,1,7"}).out, "1,6,1\n");
  EXPECT_EQ(cli({"convert", "to-composition", "5: 0,1"}).out, "1,4\n");
  EXPECT_EQ(cli({"convert", "to-set", "12"}).out, "12: 0\n");
}

TEST(CliConvert, NamesViolatedCondition) {
  const auto r = cli({"convert", "tau", "1,2"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("palindrome"), std::string::npos);
  EXPECT_NE(cli({"convert", "tau", "4,4"}).err.find("aperiodic"), std::string::npos);
  EXPECT_NE(cli({"convert", "tau-inv", "8: 0,2,6"}).err.find("disconnected"), std::string::npos);
  EXPECT_EQ(cli({"convert", "to-set", "1,,2"}).status, kExitUsage);
  EXPECT_EQ(cli({"convert", "sideways", "1,2"}).status, kExitUsage);
}

TEST(CliConvert, TextRoundTrip) {
  for (Natural n = 1; n <= 8; ++n) {
    auto stream = iter_family(n, Family::kCompositions);
    while (auto m = stream.next()) {
      const std::string text = to_string(*m);
      const std::string set = cli({"convert", "to-set", text}).out;
      ASSERT_EQ(cli({"convert", "to-composition", set.substr(0, set.size() - 1)}).out, text + "\n");
    }
  }
}

TEST(CliGraph, EdgeLists) {
  EXPECT_EQ(cli({"graph", "5", "0,1", "--mode", "digraph", "--format", "edgelist"}).out,
            "0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(cli({"graph", "8", "0,4", "--mode", "graph", "--format", "edgelist"}).out,
            "0 4\n1 5\n2 6\n3 7\n");
}

TEST(CliGraph, Dot) {
  EXPECT_EQ(cli({"graph", "3", "0,1"}).out,
            "digraph {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
  EXPECT_EQ(cli({"graph", "4", "0,1,3", "--mode", "graph"}).out,
            "graph {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n");
}

TEST(CliGraph, Errors) {
  EXPECT_EQ(cli({"graph", "5", "1,2"}).status, kExitUsage);
  EXPECT_EQ(cli({"graph", "5", "0,1", "--mode", "graph"}).status, kExitUsage);
  EXPECT_EQ(cli({"graph", "5", "0,1", "--format", "png"}).status, kExitUsage);
}

TEST(CliTable, TextRows) {
  const auto r = cli({"table", "24"});
  ASSERT_EQ(r.status, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_NE(line.find("prime"), std::string::npos);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<std::string> cells;
    for (std::string f; fields >> f;) cells.push_back(f);
    rows.push_back(cells);
  }
  ASSERT_EQ(rows.size(), 24U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"1", "1", "1", "0", "1", "-"}));
  EXPECT_EQ(rows[14][2], "16365");
  EXPECT_EQ(rows[14][3], "19");
  EXPECT_EQ(rows[23][2], "8386440");
}

TEST(CliTable, Json) {
  const auto doc = nlohmann::json::parse(cli({"table", "8", "--format", "json"}).out);
  ASSERT_EQ(doc.size(), 8U);
  EXPECT_TRUE(doc[0]["aperiodic_palindromes"].is_null());
  EXPECT_EQ(doc[7]["aperiodic_palindromes"], "12");
  EXPECT_EQ(doc[7]["prime_compositions"], "120");
  EXPECT_EQ(doc[7]["disconnected"], "8");
}

TEST(CliVerify, TinyAndFaulted) {
  const auto tiny = cli({"verify", "--max-n", "2"});
  EXPECT_EQ(tiny.status, kExitOk);
  EXPECT_EQ(tiny.out.find("FAIL"), std::string::npos);
  EXPECT_NE(tiny.out.find("PASS tau-bijection n<=2"), std::string::npos);

  const auto faulted = cli({"verify", "--max-n", "8", "--inject-fault", "literal-gcd"});
  EXPECT_EQ(faulted.status, kExitVerifyFailed);
  EXPECT_NE(faulted.out.find("FAIL connectivity-oracle"), std::string::npos);

  EXPECT_EQ(cli({"verify", "--max-n", "1"}).status, kExitUsage);
  EXPECT_EQ(cli({"verify", "--workers", "0"}).status, kExitUsage);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(cli({"list", "palindromes", "9"}).out, cli({"list", "palindromes", "9"}).out);
  EXPECT_EQ(cli({"table", "30"}).out, cli({"table", "30"}).out);
}

TEST(Cli, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("count"), std::string::npos);
}

}  // namespace
}  // namespace circulant::cli
