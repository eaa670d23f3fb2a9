#include "circulant/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "circulant/arithmetic.hpp"
#include "circulant/bijections.hpp"
#include "circulant/circulant_graph.hpp"
#include "circulant/counting.hpp"
#include "circulant/families.hpp"

namespace circulant {

namespace {

/// Tracks instances and the first counterexample of a suite.
class Run {
 public:
  Run(std::string name, Natural bound) {
    result_.name = std::move(name);
    result_.bound = bound;
  }

  [[nodiscard]] bool failed() const noexcept { return !result_.passed; }

  template <typename Describe>
  bool check(bool ok, Describe describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

Natural set_gcd(const ConnectionSet& s, Fault fault) {
  return fault == Fault::kLiteralGcd ? literal_gcd_of_set(s) : gcd_of_set(s);
}

std::string describe_set(const ConnectionSet& s) {
  std::string out = "n=" + std::to_string(s.modulus()) + ", set {";
  const auto e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "}";
}

std::string describe_word(const Composition& c) {
  return "n=" + std::to_string(c.total()) + ", composition " + to_comma_string(c);
}

template <typename Visit>
void for_each_set(Natural n, Visit visit) {
  auto stream = iter_family(n, Family::kConnectionSets);
  while (auto m = stream.next()) visit(std::get<ConnectionSet>(*m));
}

SuiteResult composition_words(Natural bound, Fault) {
  Run run("composition-words", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    std::uint64_t palindromes = 0;
    for_each_composition(n, [&](const Composition& c) {
      if (run.failed()) return;
      const auto why = [&] { return describe_word(c); };
      run.check(reverse(reverse(c)) == c, why);
      run.check(is_palindrome(c) == (reverse(c) == c), why);
      const std::size_t p = period(c);
      run.check(c.size() % p == 0, why);
      const Composition prefix(std::vector<Natural>(c.parts().begin(), c.parts().begin() + p));
      run.check(repeat(prefix, c.size() / p) == c, why);
      if (gcd_of(c) != 1) {
        const Composition v = nu(c);
        run.check(v.total() == c.total() && gcd_of(v) == 1, why);
        if (is_palindrome(c)) run.check(is_palindrome(v), why);
      }
      if (is_palindrome(c)) ++palindromes;
    });
    run.check(BigCount(palindromes) == count_palindromes(n),
              [&] { return "n=" + std::to_string(n) + ": palindrome count " + std::to_string(palindromes); });
  }
  return run.finish();
}

SuiteResult psi_round_trip(Natural bound, Fault fault) {
  Run run("psi-round-trip", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    for_each_set(n, [&](const ConnectionSet& s) {
      if (run.failed()) return;
      const auto why = [&] { return describe_set(s); };
      const Composition c = psi(s);
      run.check(psi_inv(c) == s, why);
      run.check(c.size() == s.size() && c.total() == n, why);
      run.check(gcd_of(c) == set_gcd(s, fault), [&] {
        return describe_set(s) + ": gcd of gaps " + std::to_string(gcd_of(c)) +
               " != set gcd " + std::to_string(set_gcd(s, fault));
      });
      run.check(is_symmetric(s) == is_palindrome(c), why);
    });
    for_each_composition(n, [&](const Composition& c) {
      if (run.failed()) return;
      run.check(psi(psi_inv(c)) == c, [&] { return describe_word(c); });
    });
  }
  return run.finish();
}

SuiteResult connectivity_oracle(Natural bound, Fault fault) {
  Run run("connectivity-oracle", bound);
  for (Natural n = 2; n <= bound && !run.failed(); ++n) {
    for_each_set(n, [&](const ConnectionSet& s) {
      if (run.failed()) return;
      const CirculantDigraph g = build_digraph(s);
      const bool by_gcd = set_gcd(s, fault) == 1;
      const bool by_traversal = is_connected_bfs(g);
      run.check(by_gcd == by_traversal, [&] {
        return describe_set(s) + ": gcd test says " + (by_gcd ? "connected" : "disconnected") +
               ", traversal says " + (by_traversal ? "connected" : "disconnected");
      });
      if (n <= 10) {
        run.check(is_strongly_connected(g) == by_traversal,
                  [&] { return describe_set(s) + ": weak and strong connectivity differ"; });
      }
      // Regular out-degree and rotation invariance.
      bool regular = true;
      bool rotation = true;
      for (Natural v = 0; v < n; ++v) {
        regular = regular && g.out_neighbors(v).size() == s.size() - 1;
        for (const Natural w : g.out_neighbors(v)) {
          rotation = rotation && g.has_arc((v + 1) % n, (w + 1) % n);
        }
      }
      run.check(regular && rotation, [&] { return describe_set(s) + ": not a regular rotation-invariant digraph"; });
    });
  }
  return run.finish();
}

SuiteResult symmetric_sets(Natural bound, Fault) {
  Run run("symmetric-sets", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    std::uint64_t symmetric = 0;
    for_each_set(n, [&](const ConnectionSet& s) {
      if (run.failed()) return;
      const ConnectionSet inv = inverse_set(s);
      run.check(inverse_set(inv) == s && inv.size() == s.size(), [&] { return describe_set(s); });
      run.check(is_symmetric(s) == (inv == s), [&] { return describe_set(s); });
      if (is_symmetric(s)) ++symmetric;
    });
    run.check(BigCount(symmetric) == count_palindromes(n), [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(symmetric) + " symmetric sets";
    });
  }
  return run.finish();
}

SuiteResult tau_bijection(Natural bound, Fault fault) {
  Run run("tau-bijection", bound);
  for (Natural n = 2; n <= bound && !run.failed(); ++n) {
    // Both sides are filtered out of the full streams.
    std::vector<ConnectionSet> connected;
    for_each_set(n, [&](const ConnectionSet& s) {
      if (inverse_set(s) == s && is_connected_bfs(build_digraph(s))) connected.push_back(s);
    });
    std::vector<Composition> words;
    auto all_words = iter_family(n, Family::kCompositions);
    while (auto m = all_words.next()) {
      auto& c = std::get<Composition>(*m);
      if (is_palindrome(c) && is_aperiodic(c)) words.push_back(std::move(c));
    }
    std::vector<ConnectionSet> images;
    for (const auto& c : words) {
      const ConnectionSet s = tau(c);
      run.check(is_symmetric(s) && set_gcd(s, fault) == 1,
                [&] { return describe_word(c) + ": tau image " + to_string(s) + " not connected"; });
      run.check(tau_inv(s) == c, [&] { return describe_word(c) + ": tau_inv(tau) differs"; });
      if (gcd_of(c) == 1) {
        run.check(s == psi_inv(c), [&] { return describe_word(c) + ": gcd-1 branch differs from psi_inv"; });
      }
      images.push_back(s);
      if (run.failed()) break;
    }
    const auto by_elements = [](const ConnectionSet& a, const ConnectionSet& b) {
      return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                          b.elements().begin(), b.elements().end());
    };
    std::sort(images.begin(), images.end(), by_elements);
    std::sort(connected.begin(), connected.end(), by_elements);
    run.check(std::adjacent_find(images.begin(), images.end()) == images.end(),
              [&] { return "n=" + std::to_string(n) + ": tau is not injective"; });
    run.check(images == connected,
              [&] { return "n=" + std::to_string(n) + ": tau image differs from the connected symmetric sets"; });
    run.check(BigCount(images.size()) == count_aperiodic_palindromes(n), [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " aperiodic palindromes enumerated";
    });
  }
  return run.finish();
}

SuiteResult counting_oracles(Natural bound, Fault) {
  Run run("counting-oracles", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    std::uint64_t prime = 0;
    auto all = iter_family(n, Family::kCompositions);
    while (auto m = all.next()) {
      if (gcd_of(std::get<Composition>(*m)) == 1) ++prime;
    }
    std::uint64_t palindromes = 0;
    std::uint64_t aperiodic = 0;
    auto words = iter_family(n, Family::kCompositions);
    while (auto m = words.next()) {
      const auto& c = std::get<Composition>(*m);
      if (!is_palindrome(c)) continue;
      ++palindromes;
      if (is_aperiodic(c)) ++aperiodic;
    }
    const auto where = [n](const char* what) { return "n=" + std::to_string(n) + ": " + what; };
    run.check(BigCount(prime) == count_prime_compositions(n), [&] { return where("prime count"); });
    run.check(BigCount(palindromes) == count_palindromes(n), [&] { return where("palindrome count"); });
    if (n >= 2) {
      run.check(BigCount(aperiodic) == count_aperiodic_palindromes(n),
                [&] { return where("aperiodic palindrome count"); });
    }
    run.check(count_prime_compositions(n) + count_disconnected_compositions(n) == count_compositions(n),
              [&] { return where("prime + disconnected != total"); });
  }
  return run.finish();
}

SuiteResult moebius_inversion(Natural bound, Fault) {
  Run run("moebius-inversion", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    BigCount sum;
    for (const Natural d : divisors(n)) sum += count_prime_compositions(d);
    run.check(sum == BigCount::pow2(n - 1), [&] { return "n=" + std::to_string(n); });
  }
  return run.finish();
}

SuiteResult binomial_refinement(Natural bound, Fault) {
  Run run("binomial-refinement", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    std::vector<std::uint64_t> by_parts(n + 1, 0);
    for_each_composition(n, [&](const Composition& c) { ++by_parts[c.size()]; });
    BigCount row;
    for (Natural k = 1; k <= n; ++k) {
      run.check(BigCount(by_parts[k]) == count_compositions_k_parts(n, k),
                [&] { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); });
      row += count_compositions_k_parts(n, k);
    }
    run.check(row == count_compositions(n), [&] { return "n=" + std::to_string(n) + ": row sum"; });
  }
  return run.finish();
}

SuiteResult scaling_bijection(Natural bound, Fault) {
  Run run("scaling-bijection", bound);
  for (Natural n = 1; n <= bound && !run.failed(); ++n) {
    // For every d | n: {c in C(n) : gcd(c) = d} -> C(n/d)*, c -> c/d.
    std::map<Natural, std::vector<Composition>> scaled;
    for_each_composition(n, [&](const Composition& c) {
      const Natural d = gcd_of(c);
      std::vector<Natural> parts;
      for (const Natural p : c.parts()) parts.push_back(p / d);
      scaled[d].emplace_back(std::move(parts));
    });
    for (const Natural d : divisors(n)) {
      auto& images = scaled[d];
      const auto lex = [](const Composition& a, const Composition& b) {
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                            b.parts().end());
      };
      std::sort(images.begin(), images.end(), lex);
      std::vector<Composition> targets;
      for_each_composition(n / d, [&](const Composition& c) {
        if (gcd_of(c) == 1) targets.push_back(c);
      });
      std::sort(targets.begin(), targets.end(), lex);
      run.check(images == targets,
                [&] { return "n=" + std::to_string(n) + ", d=" + std::to_string(d); });
    }
  }
  return run.finish();
}

void compositions_rec(Natural remaining, std::vector<Natural>& prefix,
                      const std::function<void(const Composition&)>& visit) {
  if (remaining == 0) {
    visit(Composition(prefix));
    return;
  }
  for (Natural first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_composition(Natural n, const std::function<void(const Composition&)>& visit) {
  if (n == 0) return;
  std::vector<Natural> prefix;
  compositions_rec(n, prefix, visit);
}

const std::vector<SuiteSpec>& verification_suites() {
  static const std::vector<SuiteSpec> suites{
      {"composition-words", 16, composition_words},
      {"psi-round-trip", 14, psi_round_trip},
      {"connectivity-oracle", 12, connectivity_oracle},
      {"symmetric-sets", 16, symmetric_sets},
      {"tau-bijection", 16, tau_bijection},
      {"counting-oracles", 20, counting_oracles},
      {"moebius-inversion", 64, moebius_inversion},
      {"binomial-refinement", 14, binomial_refinement},
      {"scaling-bijection", 16, scaling_bijection},
  };
  return suites;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const auto& suites = verification_suites();
  std::vector<SuiteResult> results(suites.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) {
      const Natural bound = options.max_n.value_or(suites[i].default_bound);
      results[i] = suites[i].run(bound, options.fault);
    }
  };
  const unsigned count = std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(suites.size()));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < count; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

std::string format_result(const SuiteResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << " n<=" << r.bound << " instances=" << r.instances;
  if (!r.passed) out << " counterexample: " << r.counterexample;
  return out.str();
}

}  // namespace circulant
