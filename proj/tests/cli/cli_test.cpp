#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "permuto/cli/cli.hpp"
#include "permuto/cli/verify.hpp"
#include "permuto/permuto.hpp"

namespace permuto::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliMu, JsonRecord) {
  const Invocation r = invoke({"mu", "--n", "4", "--k", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_EQ(r.out, "{\"n\":4,\"k\":2,\"mu\":{\"num\":13,\"den\":12},\"chern_number\":130}\n");
}

TEST(CliMu, TextCsvMarkdown) {
  EXPECT_EQ(invoke({"mu", "--n", "5", "--k", "1"}).out, "n = 5, k = 1: mu = 1, chern = 720\n");
  EXPECT_EQ(invoke({"mu", "--n", "4", "--k", "2", "--format", "csv"}).out, "n,k,mu,chern_number\n4,2,13/12,130\n");
  const Invocation md = invoke({"mu", "--n", "4", "--k", "2", "--format", "md"});
  EXPECT_NE(md.out.find("| 4 | 2 | 13/12 | 130 |"), std::string::npos);
}

TEST(CliMu, BadRange) {
  const Invocation r = invoke({"mu", "--n", "3", "--k", "5"});
  EXPECT_EQ(r.code, kExitUsageError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliReduce, ExampleTrace) {
  const Invocation r = invoke({"reduce", "2,0,1,2,0,0,2,0,2,1"});
  EXPECT_EQ(r.code, kExitSuccess);
  const std::vector<std::string> expected{
      "vector: 2,0,1,2,0,0,2,0,2,1",
      "blocks: L@1 ONE@3 M@4 R@8 ONE@10",
      "step 1: R1-left at position 1, factor -1/2",
      "step 2: R1-right at position 8, factor -1/2",
      "step 3: R2 at position 4, factor 1/3",
      "coefficient: 1/12",
  };
  EXPECT_EQ(lines(r.out), expected);
}

TEST(CliReduce, NoSteps) {
  const Invocation r = invoke({"reduce", "1,1,1"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_EQ(lines(r.out).back(), "coefficient: 1");
  EXPECT_EQ(r.out.find("step"), std::string::npos);
}

TEST(CliReduce, Vanishing) {
  const Invocation r = invoke({"reduce", "0,1,2,0,2,0,2,1,0,2"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_NE(r.out.find("VANISHES: pattern at positions 3-7 (2,0,2,0,2)"), std::string::npos);

  const Invocation j = invoke({"reduce", "--vector", "0,1,2,0,2,0,2,1,0,2", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_TRUE(parsed["vanishes"].get<bool>());
  EXPECT_EQ(parsed["pattern"]["first"], 3);
  EXPECT_EQ(parsed["pattern"]["last"], 7);
  EXPECT_EQ(parsed["coefficient"]["num"], 0);
}

TEST(CliReduce, JsonTrace) {
  const Invocation r = invoke({"reduce", "2,0,1,2,0,0,2,0,2,1", "--format", "json"});
  const auto parsed = nlohmann::json::parse(r.out);
  EXPECT_FALSE(parsed["vanishes"].get<bool>());
  ASSERT_EQ(parsed["steps"].size(), 3u);
  EXPECT_EQ(parsed["steps"][2]["rule"], "R2");
  EXPECT_EQ(parsed["steps"][2]["factor"]["den"], 3);
  EXPECT_EQ(parsed["blocks"].size(), 5u);
  EXPECT_EQ(parsed["coefficient"]["num"], 1);
  EXPECT_EQ(parsed["coefficient"]["den"], 12);
}

TEST(CliReduce, BadInput) {
  EXPECT_EQ(invoke({"reduce", "2,2,2"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"reduce", "3,0,0"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"reduce", "1,,1"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"reduce"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"reduce", "1,1", "--format", "csv"}).code, kExitUsageError);
}

TEST(CliTable, Rows) {
  const Invocation r = invoke({"table", "--n-max", "2"});
  EXPECT_EQ(r.code, kExitSuccess);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const std::vector<std::array<int, 4>> expected{{1, 0, 1, 2}, {1, 1, 1, 2}, {2, 0, 1, 6}, {2, 1, 1, 6}, {2, 2, 1, 6}};
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto row = nlohmann::json::parse(rows[j]);
    EXPECT_EQ(row["n"], expected[j][0]);
    EXPECT_EQ(row["k"], expected[j][1]);
    EXPECT_EQ(row["mu"]["num"], expected[j][2]);
    EXPECT_EQ(row["mu"]["den"], 1);
    EXPECT_EQ(row["chern_number"], expected[j][3]);
  }
}

TEST(CliTable, CsvAndEmpty) {
  const Invocation csv = invoke({"table", "--n-max", "4", "--format", "csv"});
  EXPECT_NE(csv.out.find("\n4,2,13/12,130\n"), std::string::npos);
  const Invocation empty = invoke({"table", "--n-max", "0"});
  EXPECT_EQ(empty.code, kExitSuccess);
  EXPECT_TRUE(empty.out.empty());
  EXPECT_EQ(invoke({"table", "--n-max", "65"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"table", "--n-max", "-1"}).code, kExitUsageError);
}

TEST(CliTable, LargeChernNumbersAreExact) {
  const Invocation r = invoke({"table", "--n-max", "40", "--format", "csv"});
  const std::string row = "40,20," + to_string(numerator_of(mu_closed(20, 40))) + "/" +
                          to_string(denominator_of(mu_closed(20, 40))) + "," + to_string(chern_number(20, 40));
  EXPECT_NE(r.out.find("\n" + row + "\n"), std::string::npos);
}

TEST(CliTable, JsonRoundTrip) {
  const Invocation r = invoke({"table", "--n-max", "16"});
  for (const std::string& line : lines(r.out)) {
    const auto row = nlohmann::json::parse(line);
    const int n = row["n"];
    const BigRational mu = make_rational(row["mu"]["num"].get<std::int64_t>(), row["mu"]["den"].get<std::int64_t>());
    const BigRational chern = BigRational(factorial(n + 1)) * mu;
    ASSERT_TRUE(is_integer(chern));
    EXPECT_EQ(numerator_of(chern), BigInt(row["chern_number"].get<std::int64_t>())) << line;
  }
}

TEST(CliCounts, ContributionsSumToX) {
  const Invocation r = invoke({"counts", "--n", "4", "--k", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitSuccess);
  std::map<int, BigRational> totals;
  for (const std::string& line : lines(r.out)) {
    const auto row = nlohmann::json::parse(line);
    totals[row["i"]] += make_rational(row["contribution"]["num"].get<std::int64_t>(),
                                      row["contribution"]["den"].get<std::int64_t>());
  }
  ASSERT_EQ(totals.size(), 3u);
  for (const auto& [i, total] : totals) EXPECT_EQ(total, x_contribution(2, i, 4));

  const Invocation text = invoke({"counts", "--n", "4", "--k", "2", "--i", "2"});
  EXPECT_EQ(lines(text.out).back(), "X(2,2) = 13/12");
  EXPECT_EQ(invoke({"counts", "--n", "4", "--k", "2", "--i", "3"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"counts", "--n", "4", "--k", "5"}).code, kExitUsageError);
}

TEST(CliFan, ConeCounts) {
  const Invocation r = invoke({"fan", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_EQ(r.out, "n,k,cones,ordered_partitions\n2,0,1,1\n2,1,6,6\n2,2,6,6\n");
  EXPECT_EQ(invoke({"fan", "--n", "10"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"fan", "--n", "0"}).code, kExitUsageError);
}

TEST(CliPair, MonomialAndChern) {
  const Invocation v = invoke({"pair", "--vector", "2,0", "--format", "json"});
  EXPECT_EQ(v.code, kExitSuccess);
  const auto row = nlohmann::json::parse(v.out);
  EXPECT_EQ(row["pairing"]["num"], -3);
  EXPECT_TRUE(row["agrees"].get<bool>());

  const Invocation c = invoke({"pair", "--n", "4", "--k", "2", "--point", "0,1/2,3,7,-1", "--format", "csv"});
  EXPECT_EQ(c.code, kExitSuccess);
  EXPECT_EQ(c.out, "n,k,pairing,expected,agrees\n4,2,130/1,130/1,true\n");

  EXPECT_EQ(invoke({"pair", "--n", "4"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"pair", "--vector", "1,1", "--point", "0,1,1"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"pair", "--vector", "1,1", "--point", "0,1"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"pair", "--vector", "1,1,1,1,1,1,1,1,1,1,1"}).code, kExitUsageError);
}

TEST(CliChern, Localized) {
  const Invocation r = invoke({"chern", "--n", "5", "--k", "2", "--localize", "--format", "json"});
  EXPECT_EQ(r.code, kExitSuccess);
  const auto row = nlohmann::json::parse(r.out);
  EXPECT_EQ(row["chern_number"], 840);  // 6! * (1 + 2/12)
  EXPECT_EQ(row["localization"]["num"], 840);
  EXPECT_EQ(invoke({"chern", "--n", "5", "--k", "7"}).code, kExitUsageError);
}

TEST(CliVerify, SuitesPass) {
  const Invocation identities = invoke({"verify", "--suite", "identities", "--n-max", "15"});
  EXPECT_EQ(identities.code, kExitSuccess);
  EXPECT_EQ(identities.out.rfind("PASS identities", 0), 0u);
  EXPECT_EQ(invoke({"verify", "--suite", "oracle", "--n-max", "8"}).code, kExitSuccess);
  EXPECT_EQ(invoke({"verify", "--suite", "localization", "--n-max", "7"}).code, kExitSuccess);
}

TEST(CliVerify, JobsDoNotChangeOutput) {
  const Invocation serial = invoke({"verify", "--jobs", "1"});
  const Invocation parallel = invoke({"verify", "--jobs", "3"});
  EXPECT_EQ(serial.code, kExitSuccess);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(lines(serial.out).size(), 6u);
}

TEST(CliVerify, Json) {
  const Invocation r = invoke({"verify", "--suite", "counts", "--n-max", "6", "--format", "json"});
  const auto parsed = nlohmann::json::parse(r.out);
  EXPECT_EQ(parsed["suite"], "counts");
  EXPECT_EQ(parsed["n_max"], 6);
  EXPECT_TRUE(parsed["passed"].get<bool>());
  EXPECT_GT(parsed["checks"].get<int>(), 0);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"verify", "--suite", "oracle", "--n-max", "13"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"verify", "--n-max", "-2"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"verify", "--format", "csv"}).code, kExitUsageError);
}

TEST(CliVerify, FailureReport) {
  SuiteResult good{"fan", 3, 10, 0, {}};
  SuiteResult bad{"oracle", 4, 12, 2, {"mu_bruteforce(1,2) = 0, expected 1"}};
  std::ostringstream text;
  EXPECT_EQ(report({good, bad}, false, text), kExitVerificationFailure);
  const auto out = lines(text.str());
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "PASS fan (n <= 3): 10 checks");
  EXPECT_EQ(out[1], "FAIL oracle (n <= 4): 12 checks, 2 failed");
  EXPECT_EQ(out[2], "  mu_bruteforce(1,2) = 0, expected 1");
  EXPECT_EQ(out[3], "1 suite(s) failed");

  std::ostringstream json;
  EXPECT_EQ(report({bad}, true, json), kExitVerificationFailure);
  EXPECT_FALSE(nlohmann::json::parse(json.str())["passed"].get<bool>());
  std::ostringstream ok;
  EXPECT_EQ(report({good}, false, ok), kExitSuccess);
}

TEST(CliGeneral, UsageAndHelp) {
  EXPECT_EQ(invoke({}).code, kExitUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"mu", "--n", "4"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"mu", "--n", "x", "--k", "1"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"mu", "--n", "4", "--k", "1", "--format", "xml"}).code, kExitUsageError);
  const Invocation help = invoke({"--help"});
  EXPECT_EQ(help.code, kExitSuccess);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
  EXPECT_EQ(invoke({"mu", "--help"}).code, kExitSuccess);
}

}  // namespace
}  // namespace permuto::cli
