#pragma once

// Raw and Net arrangement counts for monomials of c_k * c_{n-k} with i
// squared factors.
//
// An arrangement is a sequence of blocks tiling positions 1..n: m blocks M,
// l blocks L, r blocks R, (k - i) single entries taken from c_k and
// (n - k - i) single entries taken from c_{n-k}. Raw counts all of them; Net
// counts those in which no L is immediately followed by R.

#include <vector>

#include "permuto/exact.hpp"
#include "permuto/reduction.hpp"

namespace permuto {

struct CountContext {
  int n = 0;
  int k = 0;
  int i = 0;
};

/// Arrangements above this many blocks are refused by the enumerators.
inline constexpr int kMaxEnumeratedBlocks = 14;

/// Closed form: multinomial(m, l, r) * C(n-3m-l-r, m+l+r) * C(n-2i, k-i).
/// Throws InvalidProfileError when 2m + l + r != i or a count is negative,
/// std::invalid_argument unless 0 <= i <= k <= n.
BigInt raw_count(const BlockProfile& p, const CountContext& c);

/// Inclusion-exclusion over merged L,R pairs:
/// sum_p (-1)^p C(m+p, p) Raw_{m+p, l-p, r-p}.
BigInt net_count(const BlockProfile& p, const CountContext& c);

/// Direct enumeration of multiset permutations; ResourceLimitError when the
/// block count exceeds kMaxEnumeratedBlocks.
BigInt raw_count_enumerated(const BlockProfile& p, const CountContext& c);
BigInt net_count_enumerated(const BlockProfile& p, const CountContext& c);

/// Raw recovered from Net: sum_p C(m+p, p) Net_{m+p, l-p, r-p}.
BigInt raw_from_net(const BlockProfile& p, const CountContext& c);

/// All (m, l, r) with 2m + l + r = i, m ascending then l ascending.
std::vector<BlockProfile> compatible_profiles(int i);

}  // namespace permuto
