#include "permuto/cli/verify.hpp"

#include <sstream>

#include "permuto/cli/cli.hpp"
#include "permuto/permuto.hpp"
#include "render.hpp"

namespace permuto::cli {

namespace {

constexpr std::size_t kReportedFailures = 5;

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failed;
    if (result_.first_failures.size() < kReportedFailures) result_.first_failures.push_back(describe());
  }

  template <typename A, typename B>
  void expect_equal(const A& actual, const B& expected, const std::string& what) {
    expect(actual == expected, [&] {
      std::ostringstream os;
      os << what << " = " << to_string(actual) << ", expected " << to_string(expected);
      return os.str();
    });
  }

 private:
  SuiteResult& result_;
};

std::string call(std::string_view name, std::initializer_list<int> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ')';
}

void oracle_suite(int n_max, const ExecutionOptions& options, Recorder& check) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigRational closed = mu_closed(k, n);
      check.expect_equal(mu_via_contributions(k, n), closed, call("mu_via_contributions", {k, n}));
      check.expect_equal(mu_bruteforce(k, n, options), closed, call("mu_bruteforce", {k, n}));
      const auto histogram = contribution_histogram(k, n, options);
      for (int i = 0; i <= k; ++i) {
        const auto it = histogram.find(i);
        const BigRational bucket = it == histogram.end() ? BigRational(0) : it->second;
        const BigRational x = x_contribution(k, i, n);
        check.expect_equal(bucket, x, call("histogram", {k, n}) + "[" + std::to_string(i) + "]");
        check.expect_equal(x_via_factorization(k, i, n), x, call("x_via_factorization", {k, i, n}));
      }
      check.expect_equal(x_contribution(k, k, n), x_ii_closed(k, n), call("x_contribution", {k, k, n}));
    }
  }
}

EvaluationPoint squares_point(int n) {
  std::vector<BigRational> coords;
  for (int j = 1; j <= n + 1; ++j) coords.emplace_back(j * j);
  return EvaluationPoint(std::move(coords));
}

void localization_suite(int n_max, const ExecutionOptions& options, Recorder& check) {
  for (int n = 1; n <= n_max; ++n) {
    const EvaluationPoint t = EvaluationPoint::standard(n);
    const auto pairings = chern_pairings(n, t, options);
    for (int k = 0; k <= n; ++k) {
      check.expect_equal(pairings[static_cast<std::size_t>(k)], BigRational(chern_number(k, n)),
                         call("chern_pairing", {k, n}));
    }
    check.expect_equal(monomial_pairing(ExponentVector::ones(n), t, options), BigRational(factorial(n + 1)),
                       "euler pairing n=" + std::to_string(n));
    if (n > 6) continue;
    const BigRational chambers(factorial(n + 1));
    const EvaluationPoint other = squares_point(n);
    for (const ExponentVector& v : top_degree_vectors(n)) {
      const BigRational value = monomial_pairing(v, t, options);
      check.expect_equal(value, chambers * reduction_coefficient(v), "monomial_pairing(" + v.to_string() + ")");
      if (n <= 5) {
        check.expect_equal(monomial_pairing(v, other, options), value,
                           "monomial_pairing(" + v.to_string() + ") at t_j = j^2");
      }
    }
  }
}

void counts_suite(int n_max, Recorder& check) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= k; ++i) {
        const CountContext c{n, k, i};
        for (const BlockProfile& p : compatible_profiles(i)) {
          const std::string where = "(" + std::to_string(p.merged) + "," + std::to_string(p.left) + "," +
                                    std::to_string(p.right) + ") at " + call("", {n, k, i});
          const BigInt raw = raw_count(p, c);
          const BigInt net = net_count(p, c);
          const BigInt origin = binomial(n - 2 * i, k - i);
          check.expect_equal(raw_count_enumerated(p, c), raw, "raw_count_enumerated" + where);
          check.expect_equal(net_count_enumerated(p, c), net, "net_count_enumerated" + where);
          check.expect_equal(raw_count(p, {n, i, i}) * origin, raw, "raw factorization" + where);
          check.expect_equal(net_count(p, {n, i, i}) * origin, net, "net factorization" + where);
          check.expect_equal(raw_from_net(p, c), raw, "raw_from_net" + where);
        }
      }
    }
  }
}

void identities_suite(int n_max, Recorder& check) {
  auto expect_true = [&](bool ok, const std::string& what) {
    check.expect(ok, [&] { return what + " is false"; });
  };
  for (int N = 0; N <= n_max; ++N) {
    for (int M = 0; M <= N; ++M) expect_true(check_tri_coef(N - M, M, N), call("check_tri_coef", {N - M, M, N}));
  }
  for (int u = 0; u <= n_max; ++u) {
    for (int s = 0; s <= n_max; ++s) {
      for (int t = 0; t <= n_max; ++t) {
        expect_true(check_alternating_binomial(u, s, t), call("check_alternating_binomial", {u, s, t}));
      }
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= k / 2; ++j) expect_true(check_key_equality(k, j, n), call("check_key_equality", {k, j, n}));
      check.expect_equal(mu_closed(k, n), mu_closed(n - k, n), call("mu symmetry", {k, n}));
      const BigRational scaled = BigRational(factorial(n + 1)) * mu_closed(k, n);
      expect_true(is_integer(scaled), call("integrality", {k, n}));
      for (int i = 0; i <= k; ++i) {
        check.expect_equal(x_via_binomial_exchange(k, i, n), x_via_factorization(k, i, n),
                           call("x_via_binomial_exchange", {k, i, n}));
      }
    }
    for (int i = 0; i <= n; ++i) {
      for (int M = 0; 2 * M <= i; ++M) {
        expect_true(check_sum_of_raw(i - 2 * M, M, i, n), call("check_sum_of_raw", {i - 2 * M, M, i, n}));
      }
    }
  }
}

void fan_suite(int n_max, Recorder& check) {
  for (int n = 1; n <= n_max; ++n) {
    check.expect_equal(count_cones(n, n), factorial(n + 1), call("count_cones", {n, n}));
    check.expect_equal(count_cones(n, 1), BigInt((BigInt(1) << (n + 1)) - 2), call("count_cones", {n, 1}));
    for (int k = 0; k <= n; ++k) {
      check.expect_equal(count_cones(n, k), count_ordered_set_partitions(n + 1, k + 1), call("count_cones", {n, k}));
    }
    if (n <= kMaxSurjectivityRank) {
      check.expect(surjectivity_check(n), [&] { return call("surjectivity_check", {n}) + " is false"; });
    }
  }
}

}  // namespace

const std::vector<SuiteSpec>& all_suites() {
  static const std::vector<SuiteSpec> suites{
      {"oracle", 9, kMaxExpansionRank},
      {"localization", 7, kMaxLocalizationRank},
      {"counts", 10, kMaxEnumeratedBlocks},
      {"identities", 15, 40},
      {"fan", 7, kMaxConeCountRank},
  };
  return suites;
}

const SuiteSpec* find_suite(std::string_view name) {
  for (const SuiteSpec& suite : all_suites()) {
    if (suite.name == name) return &suite;
  }
  return nullptr;
}

SuiteResult run_suite(const SuiteSpec& suite, int n_max, const ExecutionOptions& options) {
  SuiteResult result;
  result.name = std::string(suite.name);
  result.n_max = n_max;
  Recorder check(result);
  try {
    if (suite.name == "oracle") oracle_suite(n_max, options, check);
    else if (suite.name == "localization") localization_suite(n_max, options, check);
    else if (suite.name == "counts") counts_suite(n_max, check);
    else if (suite.name == "identities") identities_suite(n_max, check);
    else if (suite.name == "fan") fan_suite(n_max, check);
  } catch (const InternalInconsistencyError& e) {
    check.expect(false, [&] { return std::string(e.what()); });
  }
  return result;
}

int report(const std::vector<SuiteResult>& results, bool json, std::ostream& out) {
  int failed_suites = 0;
  for (const SuiteResult& r : results) {
    if (!r.passed()) ++failed_suites;
    if (json) {
      std::string failures = "[";
      for (std::size_t j = 0; j < r.first_failures.size(); ++j) {
        failures += (j ? "," : "") + json_value(r.first_failures[j]);
      }
      std::string object = json_object({"suite", "n_max", "checks", "failed", "passed"},
                                       {r.name, BigInt(r.n_max), BigInt(r.checks), BigInt(r.failed), r.passed()});
      object.pop_back();
      out << object << ",\"first_failures\":" << failures << "]}\n";
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (n <= " << r.n_max << "): " << r.checks << " checks";
    if (!r.passed()) out << ", " << r.failed << " failed";
    out << '\n';
    for (const std::string& f : r.first_failures) out << "  " << f << '\n';
  }
  if (!json) {
    if (failed_suites == 0) out << "all suites passed\n";
    else out << failed_suites << " suite(s) failed\n";
  }
  return failed_suites == 0 ? kExitSuccess : kExitVerificationFailure;
}

}  // namespace permuto::cli
