#include "permuto/formulas.hpp"

#include <stdexcept>
#include <string>

#include "permuto/counting.hpp"
#include "permuto/errors.hpp"

namespace permuto {

namespace {

void require_range(int k, int n) {
  if (!(0 <= k && k <= n)) {
    throw std::invalid_argument("require 0 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  }
}

void require_range(int k, int i, int n) {
  if (!(0 <= i && i <= k && k <= n)) {
    throw std::invalid_argument("require 0 <= i <= k <= n, got k=" + std::to_string(k) +
                                " i=" + std::to_string(i) + " n=" + std::to_string(n));
  }
}

const BigRational& twelfth() {
  static const BigRational value = make_rational(1, 12);
  return value;
}

BigInt two_to(int e) { return BigInt(1) << e; }

}  // namespace

BigRational x_contribution(int k, int i, int n) {
  require_range(k, i, n);
  const BigRational minus_half = make_rational(-1, 2);
  const BigRational third = make_rational(1, 3);
  BigRational total(0);
  for (const BlockProfile& p : compatible_profiles(i)) {
    const BigInt net = net_count(p, {n, k, i});
    if (net == 0) continue;
    total += power(minus_half, p.left + p.right) * power(third, p.merged) * BigRational(net);
  }
  return total;
}

BigRational x_ii_closed(int i, int n) {
  require_range(i, n);
  BigRational sum(0);
  for (int j = 0; 2 * j <= i; ++j) {
    sum += power(twelfth(), j) * BigRational(binomial(i - j, j) * binomial(n - i - j, i - j));
  }
  return sign_power(i) * sum;
}

BigRational x_via_factorization(int k, int i, int n) {
  require_range(k, i, n);
  return BigRational(binomial(n - 2 * i, k - i)) * x_ii_closed(i, n);
}

BigRational x_via_binomial_exchange(int k, int i, int n) {
  require_range(k, i, n);
  BigRational sum(0);
  for (int j = 0; 2 * j <= i; ++j) {
    sum += power(twelfth(), j) *
           BigRational(binomial(i - j, j) * binomial(k - j, k - i) * binomial(n - i - j, k - j));
  }
  return sign_power(i) * sum;
}

BigRational mu_closed(int k, int n) {
  require_range(k, n);
  BigRational sum(0);
  for (int j = 0; 2 * j <= k; ++j) {
    sum += power(twelfth(), j) * BigRational(binomial(k - j, j) * binomial(n - k - j, j));
  }
  return sum;
}

BigRational mu_via_contributions(int k, int n) {
  require_range(k, n);
  BigRational sum(0);
  for (int i = 0; i <= k; ++i) sum += x_contribution(k, i, n);
  return sum;
}

BigInt chern_number(int k, int n) {
  const BigRational value = BigRational(factorial(n + 1)) * mu_closed(k, n);
  if (!is_integer(value)) {
    throw InternalInconsistencyError("(n+1)! * mu_k(n) is not an integer for k=" +
                                     std::to_string(k) + " n=" + std::to_string(n) + ": " +
                                     to_string(value));
  }
  return numerator_of(value);
}

MuResult compute_mu(int k, int n) {
  return MuResult{n, k, mu_closed(k, n), chern_number(k, n)};
}

bool check_tri_coef(int L, int M, int N) {
  if (L < 0 || M < 0 || L + M != N) return false;
  BigInt lhs(0);
  for (int r = 0; r <= L; ++r) lhs += multinomial({M, L - r, r});
  return lhs == two_to(L) * binomial(N, M);
}

bool check_sum_of_raw(int L, int M, int i, int n) {
  if (L < 0 || M < 0 || 2 * M + L != i || i > n) {
    throw std::invalid_argument("check_sum_of_raw requires 2M + L = i <= n with L, M >= 0");
  }
  BigInt lhs(0);
  for (int r = 0; r <= L; ++r) lhs += raw_count({M, L - r, r}, {n, i, i});
  return lhs == two_to(L) * binomial(L + M, M) * binomial(n - 3 * M - L, L + M);
}

bool check_alternating_binomial(int u, int s, int t) {
  if (u < 0) return false;
  BigInt lhs(0);
  for (int p = 0; p <= u; ++p) lhs += sign_power(p) * binomial(u, p) * binomial(s + p, t);
  return lhs == sign_power(u) * binomial(s, t - u);
}

bool check_key_equality(int k, int j, int n) {
  if (!(0 <= j && 2 * j <= k && k <= n)) {
    throw std::invalid_argument("check_key_equality requires 0 <= j <= k/2 and k <= n");
  }
  BigInt lhs(0);
  for (int p = 0; p <= k - 2 * j; ++p) {
    lhs += sign_power(k - p) * binomial(k - p - j, j) * binomial(k - j, p) *
           binomial(n - k + p - j, k - j);
  }
  return lhs == binomial(k - j, j) * binomial(n - k - j, j);
}

}  // namespace permuto
