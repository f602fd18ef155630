#include "permuto/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permuto/errors.hpp"

namespace permuto {

namespace {

void validate(const BlockProfile& p, const CountContext& c) {
  if (!(0 <= c.i && c.i <= c.k && c.k <= c.n)) {
    throw std::invalid_argument("count context requires 0 <= i <= k <= n, got n=" +
                                std::to_string(c.n) + " k=" + std::to_string(c.k) +
                                " i=" + std::to_string(c.i));
  }
  if (p.merged < 0 || p.left < 0 || p.right < 0) {
    throw InvalidProfileError("block profile counts must be non-negative");
  }
  if (p.squared_factors() != c.i) {
    throw InvalidProfileError("block profile (" + std::to_string(p.merged) + "," +
                              std::to_string(p.left) + "," + std::to_string(p.right) +
                              ") has 2m+l+r=" + std::to_string(p.squared_factors()) +
                              ", expected i=" + std::to_string(c.i));
  }
}

enum class Slot : char { kMerged, kLeft, kRight, kOneFromK, kOneFromComplement };

template <typename Accept>
BigInt count_arrangements(const BlockProfile& p, const CountContext& c, Accept accept) {
  validate(p, c);
  const int from_k = c.k - c.i;
  const int from_complement = c.n - c.k - c.i;
  if (from_complement < 0) return BigInt(0);
  const int total = p.merged + p.left + p.right + from_k + from_complement;
  if (total > kMaxEnumeratedBlocks) {
    throw ResourceLimitError("arrangement enumeration limited to " +
                             std::to_string(kMaxEnumeratedBlocks) + " blocks, got " +
                             std::to_string(total));
  }

  std::vector<Slot> slots;
  slots.reserve(static_cast<std::size_t>(total));
  slots.insert(slots.end(), static_cast<std::size_t>(p.merged), Slot::kMerged);
  slots.insert(slots.end(), static_cast<std::size_t>(p.left), Slot::kLeft);
  slots.insert(slots.end(), static_cast<std::size_t>(p.right), Slot::kRight);
  slots.insert(slots.end(), static_cast<std::size_t>(from_k), Slot::kOneFromK);
  slots.insert(slots.end(), static_cast<std::size_t>(from_complement), Slot::kOneFromComplement);

  std::uint64_t count = 0;
  do {
    if (accept(slots)) ++count;
  } while (std::next_permutation(slots.begin(), slots.end()));
  return BigInt(count);
}

}  // namespace

BigInt raw_count(const BlockProfile& p, const CountContext& c) {
  validate(p, c);
  const int blocks = p.merged + p.left + p.right;
  return multinomial({p.merged, p.left, p.right}) *
         binomial(c.n - 3 * p.merged - p.left - p.right, blocks) * binomial(c.n - 2 * c.i, c.k - c.i);
}

BigInt net_count(const BlockProfile& p, const CountContext& c) {
  validate(p, c);
  BigInt total(0);
  const int pairs = std::min(p.left, p.right);
  for (int q = 0; q <= pairs; ++q) {
    const BigInt term = binomial(p.merged + q, q) *
                        raw_count({p.merged + q, p.left - q, p.right - q}, c);
    if (q % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

BigInt raw_from_net(const BlockProfile& p, const CountContext& c) {
  validate(p, c);
  BigInt total(0);
  const int pairs = std::min(p.left, p.right);
  for (int q = 0; q <= pairs; ++q) {
    total += binomial(p.merged + q, q) * net_count({p.merged + q, p.left - q, p.right - q}, c);
  }
  return total;
}

BigInt raw_count_enumerated(const BlockProfile& p, const CountContext& c) {
  return count_arrangements(p, c, [](const std::vector<Slot>&) { return true; });
}

BigInt net_count_enumerated(const BlockProfile& p, const CountContext& c) {
  return count_arrangements(p, c, [](const std::vector<Slot>& slots) {
    for (std::size_t j = 0; j + 1 < slots.size(); ++j) {
      if (slots[j] == Slot::kLeft && slots[j + 1] == Slot::kRight) return false;
    }
    return true;
  });
}

std::vector<BlockProfile> compatible_profiles(int i) {
  std::vector<BlockProfile> out;
  for (int m = 0; 2 * m <= i; ++m) {
    for (int l = 0; l <= i - 2 * m; ++l) out.push_back({m, l, i - 2 * m - l});
  }
  return out;
}

}  // namespace permuto
