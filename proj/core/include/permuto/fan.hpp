#pragma once

// Combinatorics of the permutohedral fan: rays are the non-empty proper
// subsets of {1..n+1} and k-dimensional cones are chains S_1 < ... < S_k of
// them.

#include <cstdint>
#include <string>
#include <vector>

#include "permuto/exact.hpp"
#include "permuto/permutation.hpp"

namespace permuto {

using SubsetMask = std::uint32_t;

inline constexpr int kMaxConeCountRank = 9;
inline constexpr int kMaxSurjectivityRank = 7;

class ProperSubset {
 public:
  /// Bit j of mask stands for element j + 1 of {1..ground_size}. Throws
  /// std::invalid_argument when the subset is empty or everything.
  ProperSubset(SubsetMask mask, int ground_size);

  SubsetMask mask() const { return mask_; }
  int ground_size() const { return ground_size_; }
  int cardinality() const;
  bool contains(int element) const { return (mask_ >> (element - 1)) & 1U; }
  std::vector<int> elements() const;
  std::string to_string() const;

  friend bool operator==(const ProperSubset&, const ProperSubset&) = default;

 private:
  SubsetMask mask_;
  int ground_size_;
};

class SubsetChain {
 public:
  /// Throws std::invalid_argument unless each subset strictly contains the
  /// previous one.
  explicit SubsetChain(std::vector<ProperSubset> subsets);

  std::size_t length() const { return subsets_.size(); }
  const std::vector<ProperSubset>& subsets() const { return subsets_; }

 private:
  std::vector<ProperSubset> subsets_;
};

/// {u(1), ..., u(i)}, the ray of the coweight u.varpi_i. Requires
/// 1 <= i <= u.size() - 1.
ProperSubset ray_subset(const Permutation& u, int i);

/// Number of k-chains of non-empty proper subsets of {1..n+1}, counted by
/// walking every chain. ResourceLimitError above kMaxConeCountRank.
BigInt count_cones(int n, int k);

/// The chains themselves; intended for small n.
std::vector<SubsetChain> enumerate_chains(int n, int k);

/// Whether {u(1..i)} over all u and 1 <= i <= n hits every non-empty proper
/// subset. ResourceLimitError above kMaxSurjectivityRank.
bool surjectivity_check(int n);

/// Ordered partitions of an `elements`-set into `blocks` non-empty blocks,
/// sum_j (-1)^j C(blocks, j) (blocks - j)^elements.
BigInt count_ordered_set_partitions(int elements, int blocks);

}  // namespace permuto
