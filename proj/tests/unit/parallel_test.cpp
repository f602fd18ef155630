#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "permuto/permuto.hpp"

namespace permuto {
namespace {

TEST(OrderedReduce, FoldsInTaskOrder) {
  for (unsigned jobs : {1U, 2U, 3U, 8U}) {
    const std::string joined = ordered_reduce(10, ExecutionOptions{jobs}, std::string(),
                                              [](std::size_t j) { return std::to_string(j); });
    EXPECT_EQ(joined, "0123456789") << jobs;
  }
  EXPECT_EQ(ordered_reduce(0, ExecutionOptions{4}, 7, [](std::size_t) { return 1; }), 7);
}

TEST(OrderedReduce, RethrowsTaskFailure) {
  auto failing = [](std::size_t j) -> int {
    if (j == 3) throw std::runtime_error("task 3");
    return 1;
  };
  EXPECT_THROW(ordered_reduce(6, ExecutionOptions{1}, 0, failing), std::runtime_error);
  EXPECT_THROW(ordered_reduce(6, ExecutionOptions{3}, 0, failing), std::runtime_error);
}

TEST(OrderedReduce, ResolveJobs) {
  EXPECT_EQ(resolve_jobs(ExecutionOptions{5}), 5U);
  EXPECT_GE(resolve_jobs(ExecutionOptions{0}), 1U);
}

TEST(Parallel, ResultsMatchSingleWorker) {
  const ExecutionOptions serial{1};
  const ExecutionOptions parallel{4};
  for (int n = 1; n <= 7; ++n) {
    const int k = n / 2;
    EXPECT_EQ(mu_bruteforce(k, n, parallel), mu_bruteforce(k, n, serial));
    EXPECT_EQ(contribution_histogram(k, n, parallel), contribution_histogram(k, n, serial));
    const EvaluationPoint t = EvaluationPoint::standard(n);
    EXPECT_EQ(chern_pairings(n, t, parallel), chern_pairings(n, t, serial));
    const ExponentVector v = ExponentVector::ones(n);
    EXPECT_EQ(monomial_pairing(v, t, parallel), monomial_pairing(v, t, serial));
  }
}

}  // namespace
}  // namespace permuto
