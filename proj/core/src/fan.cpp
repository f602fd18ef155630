#include "permuto/fan.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permuto/errors.hpp"

namespace permuto {

namespace {

void require_fan_rank(int n, int limit) {
  if (n < 1) throw std::invalid_argument("fan requires n >= 1");
  if (n > limit) {
    throw ResourceLimitError("fan enumeration limited to n <= " + std::to_string(limit) +
                             ", got n=" + std::to_string(n));
  }
}

SubsetMask full_mask(int ground_size) { return (SubsetMask{1} << ground_size) - 1; }

// Extends a chain ending at `last` by `remaining` further proper supersets.
template <typename Visit>
void extend_chains(SubsetMask last, int remaining, SubsetMask full, std::vector<SubsetMask>& chain,
                   Visit& visit) {
  if (remaining == 0) {
    visit(chain);
    return;
  }
  const SubsetMask free = full & ~last;
  // Proper non-empty submasks of `free`, so last | added stays proper.
  for (SubsetMask added = (free - 1) & free; added != 0; added = (added - 1) & free) {
    chain.push_back(last | added);
    extend_chains(last | added, remaining - 1, full, chain, visit);
    chain.pop_back();
  }
}

template <typename Visit>
void for_each_chain(int n, int k, Visit visit) {
  const SubsetMask full = full_mask(n + 1);
  std::vector<SubsetMask> chain;
  if (k == 0) {
    visit(chain);
    return;
  }
  for (SubsetMask first = 1; first < full; ++first) {
    chain.push_back(first);
    extend_chains(first, k - 1, full, chain, visit);
    chain.pop_back();
  }
}

}  // namespace

ProperSubset::ProperSubset(SubsetMask mask, int ground_size) : mask_(mask), ground_size_(ground_size) {
  if (ground_size < 2 || ground_size > 31) throw std::invalid_argument("ground set size out of range");
  if (mask == 0 || mask >= full_mask(ground_size)) {
    throw std::invalid_argument("subset must be non-empty and proper");
  }
}

int ProperSubset::cardinality() const { return std::popcount(mask_); }

std::vector<int> ProperSubset::elements() const {
  std::vector<int> out;
  for (int j = 1; j <= ground_size_; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::string ProperSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int x : elements()) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << '}';
  return out.str();
}

SubsetChain::SubsetChain(std::vector<ProperSubset> subsets) : subsets_(std::move(subsets)) {
  for (std::size_t j = 1; j < subsets_.size(); ++j) {
    const SubsetMask prev = subsets_[j - 1].mask();
    const SubsetMask next = subsets_[j].mask();
    if ((prev & next) != prev || prev == next) {
      throw std::invalid_argument("subset chain must be strictly increasing");
    }
  }
}

ProperSubset ray_subset(const Permutation& u, int i) {
  const int n = u.size() - 1;
  if (i < 1 || i > n) throw std::invalid_argument("ray_subset: i must lie in 1..n");
  SubsetMask mask = 0;
  for (int j = 1; j <= i; ++j) mask |= SubsetMask{1} << (u(j) - 1);
  return ProperSubset(mask, n + 1);
}

BigInt count_cones(int n, int k) {
  require_fan_rank(n, kMaxConeCountRank);
  if (k < 0 || k > n) throw std::invalid_argument("count_cones requires 0 <= k <= n");
  std::uint64_t count = 0;
  for_each_chain(n, k, [&count](const std::vector<SubsetMask>&) { ++count; });
  return BigInt(count);
}

std::vector<SubsetChain> enumerate_chains(int n, int k) {
  require_fan_rank(n, 6);
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_chains requires 0 <= k <= n");
  std::vector<SubsetChain> out;
  for_each_chain(n, k, [&](const std::vector<SubsetMask>& masks) {
    std::vector<ProperSubset> subsets;
    for (SubsetMask m : masks) subsets.emplace_back(m, n + 1);
    out.emplace_back(std::move(subsets));
  });
  return out;
}

bool surjectivity_check(int n) {
  require_fan_rank(n, kMaxSurjectivityRank);
  const SubsetMask full = full_mask(n + 1);
  std::vector<bool> hit(full, false);
  std::vector<int> images(static_cast<std::size_t>(n) + 1);
  std::iota(images.begin(), images.end(), 1);
  do {
    const Permutation u(images);
    for (int i = 1; i <= n; ++i) hit[ray_subset(u, i).mask()] = true;
  } while (std::next_permutation(images.begin(), images.end()));
  for (SubsetMask m = 1; m < full; ++m) {
    if (!hit[m]) return false;
  }
  return true;
}

BigInt count_ordered_set_partitions(int elements, int blocks) {
  if (elements < 0 || blocks < 0) throw std::invalid_argument("counts must be non-negative");
  BigInt total(0);
  for (int j = 0; j <= blocks; ++j) {
    BigInt term = binomial(blocks, j) * boost::multiprecision::pow(BigInt(blocks - j), static_cast<unsigned>(elements));
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace permuto
