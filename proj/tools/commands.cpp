#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circulant/bijections.hpp"
#include "circulant/circulant_graph.hpp"
#include "circulant/counting.hpp"
#include "circulant/error.hpp"
#include "circulant/families.hpp"
#include "circulant/verify.hpp"
#include "../src/text_util.hpp"

namespace circulant::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kTruncated = "…truncated";

/// Families `count` understands.
Family countable_family(const std::string& name) {
  const Family f = parse_family(name);
  if (f == Family::kConnectionSets || f == Family::kSymmetricConnectionSets) {
    throw ParseError("count supports compositions, prime-compositions, disconnected, palindromes, "
                     "aperiodic-palindromes; got '" + name + "'");
  }
  return f;
}

Natural parse_n(const std::string& text) {
  const auto n = detail::parse_integer<Natural>(text, "n");
  if (n < 1) throw DomainError("n must be at least 1");
  return n;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

json member_json(const Member& m) {
  return std::visit(
      [](const auto& v) {
        json parts = json::array();
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Composition>) {
          for (const Natural p : v.parts()) parts.push_back(p);
        } else {
          for (const Natural a : v.elements()) parts.push_back(a);
        }
        return parts;
      },
      m);
}

int cmd_count(const std::string& family, const std::string& n_text, std::ostream& out) {
  const Family f = countable_family(family);
  const Natural n = parse_n(n_text);
  out << count_family(f, n) << '\n';
  return kExitOk;
}

int cmd_list(const std::string& family, const std::string& n_text, std::optional<std::uint64_t> limit,
             const std::string& format, std::ostream& out, std::ostream& err) {
  const Family f = parse_family(family);
  const Natural n = parse_n(n_text);
  if (limit && *limit < 1) throw DomainError("--limit must be at least 1");
  auto stream = iter_family(n, f);
  std::uint64_t emitted = 0;
  bool truncated = false;
  json items = json::array();
  while (auto m = stream.next()) {
    if (limit && emitted == *limit) {
      truncated = true;
      break;
    }
    ++emitted;
    if (format == "json") {
      items.push_back(member_json(*m));
    } else {
      out << to_string(*m) << '\n';
    }
  }
  if (format == "json") {
    out << items.dump() << '\n';
    if (truncated) err << kTruncated << '\n';
  } else if (truncated) {
    out << kTruncated << '\n';
  }
  return kExitOk;
}

int cmd_convert(const std::string& direction, const std::vector<std::string>& payload, std::ostream& out) {
  const std::string text = join(payload);
  if (direction == "to-set") {
    out << to_string(psi_inv(parse_comma_composition(text))) << '\n';
  } else if (direction == "to-composition") {
    out << to_comma_string(psi(parse_connection_set(text))) << '\n';
  } else if (direction == "tau") {
    out << to_string(tau(parse_comma_composition(text))) << '\n';
  } else if (direction == "tau-inv") {
    out << to_comma_string(tau_inv(parse_connection_set(text))) << '\n';
  } else {
    throw ParseError("unknown direction '" + direction + "'");
  }
  return kExitOk;
}

int cmd_graph(const std::string& n_text, const std::string& members, const std::string& mode,
              const std::string& format, std::ostream& out) {
  const Natural n = parse_n(n_text);
  const ConnectionSet s =
      make_connection_set(n, detail::parse_integer_list<std::int64_t>(members, "member"));
  const bool undirected = mode == "graph";
  const std::vector<Arc> lines = undirected ? build_graph(s).edges() : build_digraph(s).arcs();
  if (format == "edgelist") {
    for (const auto& [u, v] : lines) out << u << ' ' << v << '\n';
    return kExitOk;
  }
  const char* arrow = undirected ? " -- " : " -> ";
  out << (undirected ? "graph {\n" : "digraph {\n");
  for (Natural v = 0; v < n; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : lines) out << "  " << u << arrow << v << ";\n";
  out << "}\n";
  return kExitOk;
}

int cmd_table(const std::string& max_text, const std::string& format, std::ostream& out) {
  const CountTable table = count_table(parse_n(max_text));
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : table) {
      rows.push_back({
          {"n", row.n},
          {"compositions", row.total_compositions.to_string()},
          {"prime_compositions", row.prime_compositions.to_string()},
          {"disconnected", row.disconnected.to_string()},
          {"palindromes", row.palindromes.to_string()},
          {"aperiodic_palindromes",
           row.aperiodic_palindromes ? json(row.aperiodic_palindromes->to_string()) : json(nullptr)},
      });
    }
    out << rows.dump(2) << '\n';
    return kExitOk;
  }
  const std::vector<std::string> header{"n", "compositions", "prime", "disconnected", "palindromes",
                                        "aperiodic_palindromes"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table) {
    cells.push_back({std::to_string(row.n), row.total_compositions.to_string(),
                     row.prime_compositions.to_string(), row.disconnected.to_string(),
                     row.palindromes.to_string(),
                     row.aperiodic_palindromes ? row.aperiodic_palindromes->to_string() : "-"});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
  }
  const auto emit = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c != 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << r[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& r : cells) emit(r);
  return kExitOk;
}

int cmd_verify(std::optional<std::uint64_t> max_n, unsigned workers, const std::string& fault,
               std::ostream& out) {
  VerifyOptions options;
  if (max_n) {
    if (*max_n < 2) throw DomainError("--max-n must be at least 2");
    options.max_n = *max_n;
  }
  options.workers = workers;
  if (fault == "literal-gcd") {
    options.fault = Fault::kLiteralGcd;
  } else if (fault != "none") {
    throw ParseError("unknown fault '" + fault + "'");
  }
  bool all_passed = true;
  for (const auto& r : run_verification(options)) {
    out << format_result(r) << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositions, palindromes and circulant (di)graphs"};
  app.name("circulant");
  app.require_subcommand(1);

  std::string family;
  std::string n_text;
  std::string format;
  std::string mode;

  auto* count = app.add_subcommand("count", "Exact size of a family");
  count->add_option("family", family,
                    "compositions | prime-compositions | disconnected | palindromes | aperiodic-palindromes")
      ->required();
  count->add_option("n", n_text, "order / total")->required();

  std::optional<std::uint64_t> limit;
  auto* list = app.add_subcommand("list", "Enumerate a family in bitmask order");
  list->add_option("family", family, "a count family, connection-sets or symmetric-connection-sets")
      ->required();
  list->add_option("n", n_text, "order / total")->required();
  list->add_option("--limit", limit, "stop after this many members");
  list->add_option("--format", format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::string direction;
  std::vector<std::string> payload;
  auto* convert = app.add_subcommand("convert", "Map between compositions and connection sets");
  convert->add_option("direction", direction, "to-set | to-composition | tau | tau-inv")
      ->required()
      ->check(CLI::IsMember({"to-set", "to-composition", "tau", "tau-inv"}));
  convert->add_option("payload", payload, "'2,1,2' or '5: 0,2,3'")->required();

  std::string members;
  auto* graph = app.add_subcommand("graph", "Export G(n, S) as DOT or an edge list");
  graph->add_option("n", n_text, "order")->required();
  graph->add_option("members", members, "connection set members, e.g. 0,1,7")->required();
  graph->add_option("--mode", mode, "digraph | graph")
      ->default_val("digraph")
      ->check(CLI::IsMember({"digraph", "graph"}));
  graph->add_option("--format", format, "dot | edgelist")
      ->default_val("dot")
      ->check(CLI::IsMember({"dot", "edgelist"}));

  std::string max_text;
  auto* table = app.add_subcommand("table", "Count table for n = 1..max_n");
  table->add_option("max_n", max_text, "last row")->required();
  table->add_option("--format", format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::optional<std::uint64_t> max_n;
  unsigned workers = 1;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "Run every exhaustive invariant suite");
  verify->add_option("--max-n", max_n, "run every suite up to this n");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault, "none | literal-gcd")
      ->check(CLI::IsMember({"none", "literal-gcd"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(family, n_text, out);
    if (*list) return cmd_list(family, n_text, limit, format, out, err);
    if (*convert) return cmd_convert(direction, payload, out);
    if (*graph) return cmd_graph(n_text, members, mode, format, out);
    if (*table) return cmd_table(max_text, format, out);
    if (*verify) return cmd_verify(max_n, workers, fault, out);
  } catch (const std::invalid_argument& e) {
    err << "circulant: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace circulant::cli
