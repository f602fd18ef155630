#include "permuto/cli/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "permuto/cli/verify.hpp"
#include "permuto/permuto.hpp"
#include "render.hpp"

namespace permuto::cli {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  std::optional<int> i;
  std::optional<int> n_max;
  std::string format = "text";
  std::string table_format = "json";
  unsigned jobs = 1;
  std::string vector;
  std::string point;
  std::string suite = "all";
  bool localize = false;
};

const std::vector<std::string> kAllFormats{"text", "json", "csv", "md"};
const std::vector<std::string> kTraceFormats{"text", "json"};

EvaluationPoint point_for(const Options& o, int n) {
  return o.point.empty() ? EvaluationPoint::standard(n) : EvaluationPoint::parse(o.point);
}

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t j = 0; j < items.size(); ++j) out += (j ? "," : "") + items[j];
  return out + "]";
}

int cmd_mu(const Options& o, std::ostream& out) {
  const MuResult r = compute_mu(o.k, o.n);
  const Format format = parse_format(o.format);
  if (format == Format::kText) {
    out << "n = " << r.n << ", k = " << r.k << ": mu = " << to_string(r.mu)
        << ", chern = " << to_string(r.chern_number) << '\n';
    return kExitSuccess;
  }
  render(Table{{"n", "k", "mu", "chern_number"}, {{BigInt(r.n), BigInt(r.k), r.mu, r.chern_number}}}, format, out);
  return kExitSuccess;
}

int cmd_chern(const Options& o, std::ostream& out) {
  const BigInt closed = chern_number(o.k, o.n);
  Table table{{"n", "k", "chern_number"}, {{BigInt(o.n), BigInt(o.k), closed}}};
  bool agrees = true;
  if (o.localize) {
    const BigRational pairing = chern_pairing(o.k, o.n, point_for(o, o.n), ExecutionOptions{o.jobs});
    agrees = pairing == BigRational(closed);
    table.columns.insert(table.columns.end(), {"localization", "agrees"});
    table.rows[0].insert(table.rows[0].end(), {pairing, agrees});
  }
  render(table, parse_format(o.format), out);
  return agrees ? kExitSuccess : kExitVerificationFailure;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const ExponentVector v = ExponentVector::parse(o.vector);
  const auto trace = reduce_with_trace(v);
  const auto decomposition = decompose(v);
  std::optional<VanishingPattern> pattern;
  if (!trace) {
    pattern = find_vanishing_pattern(v);
    if (!pattern) throw InternalInconsistencyError("vanishing vector without a vanishing pattern");
  }
  std::string pattern_entries;
  if (pattern) {
    for (int j = pattern->first; j <= pattern->last; ++j) {
      pattern_entries += (j > pattern->first ? "," : "") + std::to_string(v.at(j));
    }
  }
  const BigRational coefficient = trace ? trace->coefficient : BigRational(0);

  if (parse_format(o.format) == Format::kJson) {
    std::vector<std::string> keys{"vector", "vanishes"};
    std::vector<Cell> values{v.to_string(), !trace.has_value()};
    std::string object = json_object(keys, values);
    object.pop_back();
    if (trace) {
      std::vector<std::string> blocks;
      for (const Block& b : decomposition->blocks()) {
        blocks.push_back(json_object({"kind", "position"}, {std::string(block_name(b.kind)), BigInt(b.position)}));
      }
      std::vector<std::string> steps;
      for (const ReductionStep& s : trace->steps) {
        steps.push_back(json_object({"rule", "position", "factor"},
                                    {std::string(rule_name(s.rule)), BigInt(s.position), s.factor}));
      }
      object += ",\"blocks\":" + json_array(blocks) + ",\"steps\":" + json_array(steps);
    } else {
      object += ",\"pattern\":" + json_object({"first", "last", "entries"},
                                              {BigInt(pattern->first), BigInt(pattern->last), pattern_entries});
    }
    out << object << ",\"coefficient\":" << json_value(coefficient) << "}\n";
    return kExitSuccess;
  }

  out << "vector: " << v.to_string() << '\n';
  if (trace) {
    out << "blocks:";
    for (const Block& b : decomposition->blocks()) out << ' ' << block_name(b.kind) << '@' << b.position;
    out << '\n';
    int index = 0;
    for (const ReductionStep& s : trace->steps) {
      out << "step " << ++index << ": " << rule_name(s.rule) << " at position " << s.position << ", factor "
          << to_string(s.factor) << '\n';
    }
  } else {
    out << "VANISHES: pattern at positions " << pattern->first << "-" << pattern->last << " (" << pattern_entries
        << ")\n";
  }
  out << "coefficient: " << to_string(coefficient) << '\n';
  return kExitSuccess;
}

int cmd_counts(const Options& o, std::ostream& out) {
  if (!(0 <= o.k && o.k <= o.n)) throw std::invalid_argument("counts requires 0 <= k <= n");
  if (o.i && !(0 <= *o.i && *o.i <= o.k)) throw std::invalid_argument("counts requires 0 <= i <= k");
  const int lo = o.i.value_or(0);
  const int hi = o.i.value_or(o.k);
  Table table{{"n", "k", "i", "m", "l", "r", "raw", "net", "weight", "contribution"}, {}};
  std::vector<std::pair<int, BigRational>> totals;
  for (int i = lo; i <= hi; ++i) {
    const CountContext c{o.n, o.k, i};
    BigRational total(0);
    for (const BlockProfile& p : compatible_profiles(i)) {
      const BigInt net = net_count(p, c);
      const BigRational weight = power(make_rational(-1, 2), p.left + p.right) * power(make_rational(1, 3), p.merged);
      const BigRational contribution = weight * BigRational(net);
      total += contribution;
      table.rows.push_back({BigInt(o.n), BigInt(o.k), BigInt(i), BigInt(p.merged), BigInt(p.left), BigInt(p.right),
                            raw_count(p, c), net, weight, contribution});
    }
    totals.emplace_back(i, total);
  }
  const Format format = parse_format(o.format);
  render(table, format, out);
  if (format == Format::kText) {
    for (const auto& [i, total] : totals) out << "X(" << o.k << "," << i << ") = " << to_string(total) << '\n';
  }
  return kExitSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
  Table table{{"n", "k", "mu", "chern_number"}, {}};
  for (int n = 1; n <= o.n_max.value_or(0); ++n) {
    for (int k = 0; k <= n; ++k) {
      const MuResult r = compute_mu(k, n);
      table.rows.push_back({BigInt(n), BigInt(k), r.mu, r.chern_number});
    }
  }
  render(table, parse_format(o.table_format), out);
  return kExitSuccess;
}

int cmd_fan(const Options& o, std::ostream& out) {
  Table table{{"n", "k", "cones", "ordered_partitions"}, {}};
  bool agrees = true;
  for (int k = 0; k <= o.n; ++k) {
    const BigInt cones = count_cones(o.n, k);
    const BigInt partitions = count_ordered_set_partitions(o.n + 1, k + 1);
    agrees = agrees && cones == partitions;
    table.rows.push_back({BigInt(o.n), BigInt(k), cones, partitions});
  }
  render(table, parse_format(o.format), out);
  return agrees ? kExitSuccess : kExitVerificationFailure;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const ExecutionOptions exec{o.jobs};
  Table table;
  bool agrees = false;
  if (!o.vector.empty()) {
    const ExponentVector v = ExponentVector::parse(o.vector);
    const int n = v.size();
    const BigRational pairing = monomial_pairing(v, point_for(o, n), exec);
    const BigRational expected = BigRational(factorial(n + 1)) * reduction_coefficient(v);
    agrees = pairing == expected;
    table = Table{{"vector", "pairing", "expected", "agrees"}, {{v.to_string(), pairing, expected, agrees}}};
  } else {
    const BigRational pairing = chern_pairing(o.k, o.n, point_for(o, o.n), exec);
    const BigRational expected(chern_number(o.k, o.n));
    agrees = pairing == expected;
    table = Table{{"n", "k", "pairing", "expected", "agrees"}, {{BigInt(o.n), BigInt(o.k), pairing, expected, agrees}}};
  }
  render(table, parse_format(o.format), out);
  return agrees ? kExitSuccess : kExitVerificationFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<const SuiteSpec*> suites;
  if (o.suite == "all") {
    for (const SuiteSpec& s : all_suites()) suites.push_back(&s);
  } else {
    suites.push_back(find_suite(o.suite));
  }
  std::vector<std::pair<const SuiteSpec*, int>> plan;
  for (const SuiteSpec* s : suites) {
    int bound = o.n_max.value_or(s->default_n_max);
    if (o.suite == "all") {
      bound = std::min(bound, s->limit);
    } else if (bound > s->limit) {
      throw std::invalid_argument("suite " + std::string(s->name) + " accepts --n-max up to " +
                                  std::to_string(s->limit));
    }
    plan.emplace_back(s, bound);
  }

  std::vector<SuiteResult> results;
  for (const auto& [suite, bound] : plan) results.push_back(run_suite(*suite, bound, ExecutionOptions{o.jobs}));
  return report(results, parse_format(o.format) == Format::kJson, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Products of Chern classes on permutohedral varieties", "permuto"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { return sub->add_option("--n", o.n, "rank n")->required(); };
  auto add_k = [&](CLI::App* sub) { return sub->add_option("--k", o.k, "degree k")->required(); };
  auto add_format = [&](CLI::App* sub, const std::vector<std::string>& choices) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(choices))->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads (0 = one per hardware thread)")->capture_default_str();
  };

  CLI::App* mu = app.add_subcommand("mu", "coefficient mu_k(n) and the Chern number");
  add_n(mu);
  add_k(mu);
  add_format(mu, kAllFormats);

  CLI::App* chern = app.add_subcommand("chern", "Chern number (n+1)! mu_k(n)");
  add_n(chern);
  add_k(chern);
  add_format(chern, kAllFormats);
  chern->add_flag("--localize", o.localize, "also evaluate by fixed-point localization");
  chern->add_option("--point", o.point, "evaluation point, e.g. 0,1/2,3");
  add_jobs(chern);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a monomial to a multiple of c_n, with its trace");
  reduce->add_option("vector,--vector", o.vector, "exponent vector, e.g. 2,0,1,1")->required();
  add_format(reduce, kTraceFormats);

  CLI::App* counts = app.add_subcommand("counts", "Raw and Net block counts per profile");
  add_n(counts);
  add_k(counts);
  counts->add_option("--i", o.i, "number of squared factors (default: all)");
  add_format(counts, kAllFormats);

  CLI::App* table = app.add_subcommand("table", "mu_k(n) and Chern numbers for all n <= n-max");
  table->add_option("--n-max", o.n_max, "largest n")->required()->check(CLI::Range(0, 64));
  table->add_option("--format", o.table_format, "output format")
      ->check(CLI::IsMember(kAllFormats))
      ->capture_default_str();

  CLI::App* fan = app.add_subcommand("fan", "cone counts of the permutohedral fan");
  add_n(fan);
  add_format(fan, kAllFormats);

  CLI::App* pair = app.add_subcommand("pair", "fixed-point pairing of a monomial, or of c_k c_{n-k}");
  pair->add_option("--vector", o.vector, "exponent vector of the monomial");
  pair->add_option("--n", o.n, "rank n (with --k, when no --vector)");
  pair->add_option("--k", o.k, "degree k (with --n, when no --vector)");
  pair->add_option("--point", o.point, "evaluation point, e.g. 0,1/2,3");
  add_format(pair, kAllFormats);
  add_jobs(pair);

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", o.suite, "suite to run")
      ->check(CLI::IsMember({"all", "oracle", "localization", "counts", "identities", "fan"}))
      ->capture_default_str();
  verify->add_option("--n-max", o.n_max, "rank bound (default depends on the suite)")->check(CLI::NonNegativeNumber);
  add_format(verify, kTraceFormats);
  add_jobs(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (pair->parsed() && o.vector.empty() && (pair->count("--n") == 0 || pair->count("--k") == 0)) {
      throw CLI::ValidationError("pair", "needs --vector, or both --n and --k");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsageError;
  }

  try {
    if (mu->parsed()) return cmd_mu(o, out);
    if (chern->parsed()) return cmd_chern(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (counts->parsed()) return cmd_counts(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (fan->parsed()) return cmd_fan(o, out);
    if (pair->parsed()) return cmd_pair(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InternalInconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  return kExitUsageError;
}

}  // namespace permuto::cli
