#include <set>

#include <gtest/gtest.h>

#include "permuto/errors.hpp"
#include "permuto/fan.hpp"
#include "permuto/localization.hpp"

namespace permuto {
namespace {

TEST(ProperSubset, Basics) {
  const ProperSubset s(0b101, 3);
  EXPECT_EQ(s.cardinality(), 2);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.elements(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_THROW(ProperSubset(0, 3), std::invalid_argument);
  EXPECT_THROW(ProperSubset(0b111, 3), std::invalid_argument);
  EXPECT_THROW(ProperSubset(0b1000, 3), std::invalid_argument);
}

TEST(SubsetChain, RequiresStrictInclusion) {
  EXPECT_NO_THROW(SubsetChain({ProperSubset(0b01, 3), ProperSubset(0b11, 3)}));
  EXPECT_THROW(SubsetChain({ProperSubset(0b01, 3), ProperSubset(0b01, 3)}), std::invalid_argument);
  EXPECT_THROW(SubsetChain({ProperSubset(0b01, 3), ProperSubset(0b110, 3)}), std::invalid_argument);
}

TEST(RaySubset, Examples) {
  EXPECT_EQ(ray_subset(Permutation::identity(3), 2).elements(), (std::vector<int>{1, 2}));
  EXPECT_EQ(ray_subset(Permutation({2, 3, 1}), 1).elements(), (std::vector<int>{2}));
  EXPECT_THROW(ray_subset(Permutation::identity(3), 3), std::invalid_argument);
  EXPECT_THROW(ray_subset(Permutation::identity(3), 0), std::invalid_argument);

  std::vector<int> images{1, 2, 3, 4, 5};
  do {
    for (int i = 1; i <= 4; ++i) ASSERT_EQ(ray_subset(Permutation(images), i).cardinality(), i);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST(CountCones, Examples) {
  EXPECT_EQ(count_cones(2, 1), 6);
  EXPECT_EQ(count_cones(2, 2), 6);
  EXPECT_EQ(count_cones(3, 0), 1);
  EXPECT_EQ(enumerate_chains(2, 1).size(), 6u);
  EXPECT_THROW(count_cones(3, 4), std::invalid_argument);
  EXPECT_THROW(count_cones(kMaxConeCountRank + 1, 1), ResourceLimitError);
}

TEST(CountCones, ChainsAreDistinctAndValid) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto chains = enumerate_chains(n, k);
      std::set<std::vector<SubsetMask>> seen;
      for (const SubsetChain& chain : chains) {
        ASSERT_EQ(chain.length(), static_cast<std::size_t>(k));
        std::vector<SubsetMask> masks;
        for (const ProperSubset& s : chain.subsets()) masks.push_back(s.mask());
        seen.insert(masks);
      }
      ASSERT_EQ(seen.size(), chains.size());
      ASSERT_EQ(BigInt(chains.size()), count_cones(n, k));
    }
  }
}

TEST(Surjectivity, Examples) {
  EXPECT_TRUE(surjectivity_check(1));
  EXPECT_TRUE(surjectivity_check(2));
  EXPECT_TRUE(surjectivity_check(4));
  EXPECT_THROW(surjectivity_check(kMaxSurjectivityRank + 1), ResourceLimitError);
}

TEST(OrderedSetPartitions, SmallValues) {
  EXPECT_EQ(count_ordered_set_partitions(3, 2), 6);
  EXPECT_EQ(count_ordered_set_partitions(4, 2), 14);
  EXPECT_EQ(count_ordered_set_partitions(4, 4), 24);
  EXPECT_EQ(count_ordered_set_partitions(0, 0), 1);
  EXPECT_EQ(count_ordered_set_partitions(3, 0), 0);
  EXPECT_EQ(count_ordered_set_partitions(2, 3), 0);
}

TEST(FanProperties, ConeCountsUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    ASSERT_EQ(count_cones(n, n), factorial(n + 1));
    ASSERT_EQ(count_cones(n, 1), (BigInt(1) << (n + 1)) - 2);
    for (int k = 0; k <= n; ++k) ASSERT_EQ(count_cones(n, k), count_ordered_set_partitions(n + 1, k + 1));
  }
}

TEST(FanProperties, MaximalConesMatchEulerPairing) {
  for (int n = 1; n <= 7; ++n) {
    ASSERT_EQ(BigRational(count_cones(n, n)), monomial_pairing(ExponentVector::ones(n), EvaluationPoint::standard(n)));
  }
}

}  // namespace
}  // namespace permuto
