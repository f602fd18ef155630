#pragma once

// The coefficient mu_k(n) with c_k * c_{n-k} = mu_k(n) * c_n on the
// permutohedral variety, the per-stratum contributions X(k, i) it is built
// from, and checkers for the binomial identities that connect them.
//
// All functions take (k, n) or (k, i, n) in that order and require
// 0 <= i <= k <= n; violations throw std::invalid_argument.

#include "permuto/exact.hpp"

namespace permuto {

struct MuResult {
  int n = 0;
  int k = 0;
  BigRational mu;
  BigInt chern_number;  // (n + 1)! * mu
};

/// Total coefficient of the monomials with exactly i squared factors,
/// summed over block profiles: sum (-1/2)^(l+r) (1/3)^m Net_{m,l,r}(k, i).
BigRational x_contribution(int k, int i, int n);

/// (-1)^i sum_j (1/12)^j C(i-j, j) C(n-i-j, i-j).
BigRational x_ii_closed(int i, int n);

/// C(n-2i, k-i) * x_ii_closed(i, n).
BigRational x_via_factorization(int k, int i, int n);

/// (-1)^i sum_j (1/12)^j C(i-j, j) C(k-j, k-i) C(n-i-j, k-j).
BigRational x_via_binomial_exchange(int k, int i, int n);

/// sum_{j <= k/2} (1/12)^j C(k-j, j) C(n-k-j, j).
BigRational mu_closed(int k, int n);

/// sum_{i=0}^{k} x_contribution(k, i, n).
BigRational mu_via_contributions(int k, int n);

/// (n+1)! * mu_closed(k, n). Throws InternalInconsistencyError if the
/// product is not an integer.
BigInt chern_number(int k, int n);

MuResult compute_mu(int k, int n);

// Identity checkers. Each returns whether both sides agree exactly.

/// sum_r multinomial(M, L-r, r) == 2^L C(N, M), for L + M = N.
/// Returns false when the precondition does not hold.
bool check_tri_coef(int L, int M, int N);

/// sum_{l+r=L} Raw_{M,l,r}(i, i) == 2^L C(L+M, M) C(n-3M-L, L+M).
/// Throws std::invalid_argument unless 2M + L = i <= n.
bool check_sum_of_raw(int L, int M, int i, int n);

/// sum_{p=0}^{u} (-1)^p C(u, p) C(s+p, t) == (-1)^u C(s, t-u).
bool check_alternating_binomial(int u, int s, int t);

/// sum_{p=0}^{k-2j} (-1)^(k-p) C(k-p-j, j) C(k-j, p) C(n-k+p-j, k-j)
///   == C(k-j, j) C(n-k-j, j), for 0 <= j <= k/2 and k <= n.
bool check_key_equality(int k, int j, int n);

}  // namespace permuto
