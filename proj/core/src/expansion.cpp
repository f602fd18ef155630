#include "permuto/expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "permuto/errors.hpp"

namespace permuto {

namespace {

void require_expansion_range(int k, int n) {
  if (!(0 <= k && k <= n) || n < 1) {
    throw std::invalid_argument("expansion requires 0 <= k <= n and n >= 1");
  }
  if (n > kMaxExpansionRank) {
    throw ResourceLimitError("expansion limited to n <= " + std::to_string(kMaxExpansionRank) +
                             ", got n=" + std::to_string(n));
  }
}

std::vector<int> mask_indices(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (mask & (1U << j)) out.push_back(j + 1);
  }
  return out;
}

// Number of squared entries of the term, i.e. |A intersect B|.
int squared_count(const TermPair& term) { return std::popcount(term.first & term.second); }

}  // namespace

std::vector<int> TermPair::first_indices() const { return mask_indices(first, n); }
std::vector<int> TermPair::second_indices() const { return mask_indices(second, n); }

ExponentVector TermPair::vector() const {
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    entries[static_cast<std::size_t>(j)] =
        static_cast<int>((first >> j) & 1U) + static_cast<int>((second >> j) & 1U);
  }
  return ExponentVector(std::move(entries));
}

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  // selected[j] marks index j+1; prev_permutation over a 1...10...0 pattern
  // walks the combinations in lexicographic order.
  std::vector<bool> selected(static_cast<std::size_t>(n), false);
  std::fill(selected.begin(), selected.begin() + k, true);
  do {
    std::uint32_t mask = 0;
    for (int j = 0; j < n; ++j) {
      if (selected[static_cast<std::size_t>(j)]) mask |= 1U << j;
    }
    out.push_back(mask);
  } while (std::prev_permutation(selected.begin(), selected.end()));
  return out;
}

void for_each_term(int k, int n, const std::function<void(const TermPair&)>& visit) {
  require_expansion_range(k, n);
  const auto firsts = subsets_of_size(n, k);
  const auto seconds = subsets_of_size(n, n - k);
  for (std::uint32_t a : firsts) {
    for (std::uint32_t b : seconds) visit(TermPair{n, a, b});
  }
}

std::uint64_t term_count(int k, int n) {
  require_expansion_range(k, n);
  const BigInt count = binomial(n, k) * binomial(n, n - k);
  return count.convert_to<std::uint64_t>();
}

std::map<int, BigRational> contribution_histogram(int k, int n, const ExecutionOptions& options) {
  require_expansion_range(k, n);
  const auto firsts = subsets_of_size(n, k);
  const auto seconds = subsets_of_size(n, n - k);

  using Histogram = std::vector<BigRational>;
  auto task = [&](std::size_t t) {
    Histogram local(static_cast<std::size_t>(k + 1), BigRational(0));
    for (std::uint32_t b : seconds) {
      const TermPair term{n, firsts[t], b};
      local[static_cast<std::size_t>(squared_count(term))] += reduction_coefficient(term.vector());
    }
    return local;
  };

  struct Accumulator {
    Histogram buckets;
    Accumulator& operator+=(const Histogram& other) {
      for (std::size_t j = 0; j < other.size(); ++j) buckets[j] += other[j];
      return *this;
    }
  };

  Accumulator init{Histogram(static_cast<std::size_t>(k + 1), BigRational(0))};
  const Accumulator total = ordered_reduce(firsts.size(), options, std::move(init), task);

  std::map<int, BigRational> out;
  for (int i = 0; i <= k; ++i) out[i] = total.buckets[static_cast<std::size_t>(i)];
  return out;
}

BigRational mu_bruteforce(int k, int n, const ExecutionOptions& options) {
  require_expansion_range(k, n);
  const auto firsts = subsets_of_size(n, k);
  const auto seconds = subsets_of_size(n, n - k);
  return ordered_reduce(firsts.size(), options, BigRational(0), [&](std::size_t t) {
    BigRational local(0);
    for (std::uint32_t b : seconds) local += reduction_coefficient(TermPair{n, firsts[t], b}.vector());
    return local;
  });
}

}  // namespace permuto
