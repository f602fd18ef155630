#pragma once

// Intersection numbers on the permutohedral variety by torus fixed-point
// localization. The fixed points are the Weyl chambers, one per permutation
// w of {1..n+1}. At chamber w the class alpha_i restricts to the root
// w.alpha_i, whose value at a point t is t_{w(i)} - t_{w(i+1)}, and the
// tangent weights are those same n roots. A top-degree monomial therefore
// pairs with the fundamental class as
//
//   sum_w prod_i d_i^(v_i - 1),   d_i = t_{w(i)} - t_{w(i+1)}.
//
// Every summand is a ratio of two degree-n products, so the choice of sign
// for the tangent weights cancels and the total is independent of t.

#include <span>
#include <vector>

#include "permuto/exact.hpp"
#include "permuto/parallel.hpp"
#include "permuto/permutation.hpp"
#include "permuto/reduction.hpp"

namespace permuto {

/// Fixed-point sums run over (n+1)! chambers; larger ranks are refused.
inline constexpr int kMaxLocalizationRank = 10;

class EvaluationPoint {
 public:
  /// Throws DegeneratePointError when two coordinates coincide, and
  /// std::invalid_argument when fewer than two coordinates are given.
  explicit EvaluationPoint(std::vector<BigRational> coordinates);

  /// t_j = j for j = 1..n+1.
  static EvaluationPoint standard(int n);

  /// Parses comma-separated integers or fractions, e.g. "0,1/2,3".
  static EvaluationPoint parse(std::string_view text);

  /// n, the rank: one less than the number of coordinates.
  int rank() const { return static_cast<int>(coordinates_.size()) - 1; }
  const BigRational& at(int j) const { return coordinates_.at(static_cast<std::size_t>(j - 1)); }
  std::span<const BigRational> coordinates() const { return coordinates_; }

 private:
  std::vector<BigRational> coordinates_;
};

/// (w.alpha_1, ..., w.alpha_n) evaluated at t.
std::vector<BigRational> root_values(const Permutation& w, const EvaluationPoint& t);

/// Elementary symmetric polynomial e_j; throws std::invalid_argument unless
/// 0 <= j <= values.size().
BigRational elementary_symmetric(std::span<const BigRational> values, int j);

/// <alpha^v, [X]>; v must have degree n and t must have n + 1 coordinates.
BigRational monomial_pairing(const ExponentVector& v, const EvaluationPoint& t,
                             const ExecutionOptions& options = {});

/// <c_k c_{n-k}, [X]> = sum_w e_k(d) e_{n-k}(d) / e_n(d).
BigRational chern_pairing(int k, int n, const EvaluationPoint& t,
                          const ExecutionOptions& options = {});

/// chern_pairing for every k = 0..n in a single pass over the chambers.
std::vector<BigRational> chern_pairings(int n, const EvaluationPoint& t,
                                        const ExecutionOptions& options = {});

}  // namespace permuto
