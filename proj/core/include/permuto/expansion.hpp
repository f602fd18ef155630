#pragma once

// Brute-force expansion of c_k * c_{n-k} = e_k(alpha) * e_{n-k}(alpha) into
// monomials, each reduced to a multiple of c_n.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "permuto/exact.hpp"
#include "permuto/parallel.hpp"
#include "permuto/reduction.hpp"

namespace permuto {

inline constexpr int kMaxExpansionRank = 12;

/// One term of the expansion: A indexes the factors taken from c_k, B those
/// taken from c_{n-k}. Bit j of a mask stands for alpha_{j+1}.
struct TermPair {
  int n = 0;
  std::uint32_t first = 0;   // A, |A| = k
  std::uint32_t second = 0;  // B, |B| = n - k

  std::vector<int> first_indices() const;
  std::vector<int> second_indices() const;

  /// v_j = [j in A] + [j in B].
  ExponentVector vector() const;
};

/// All k-subsets of {1..n} as bitmasks, in lexicographic order of their
/// sorted index lists.
std::vector<std::uint32_t> subsets_of_size(int n, int k);

/// Visits every (A, B) pair once, A-major, both in lexicographic order.
/// Throws std::invalid_argument unless 0 <= k <= n, and ResourceLimitError
/// when n > kMaxExpansionRank.
void for_each_term(int k, int n, const std::function<void(const TermPair&)>& visit);

std::uint64_t term_count(int k, int n);

/// Sum of reduction_coefficient over all terms.
BigRational mu_bruteforce(int k, int n, const ExecutionOptions& options = {});

/// Same sum, bucketed by the number of squared entries i.
std::map<int, BigRational> contribution_histogram(int k, int n,
                                                  const ExecutionOptions& options = {});

}  // namespace permuto
