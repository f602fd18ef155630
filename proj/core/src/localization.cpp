#include "permuto/localization.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "permuto/errors.hpp"

namespace permuto {

namespace {

void require_rank(int n, const EvaluationPoint& t) {
  if (n < 1) throw std::invalid_argument("localization requires n >= 1");
  if (n > kMaxLocalizationRank) {
    throw ResourceLimitError("fixed-point sums limited to n <= " +
                             std::to_string(kMaxLocalizationRank) + ", got n=" + std::to_string(n));
  }
  if (t.rank() != n) {
    throw std::invalid_argument("evaluation point has " + std::to_string(t.rank() + 1) +
                                " coordinates, expected " + std::to_string(n + 1));
  }
}

// Every summand is homogeneous of degree zero in t, so scaling t by the
// common denominator leaves the pairing unchanged and lets the chamber loop
// work on integer root values.
std::vector<BigInt> integral_coordinates(const EvaluationPoint& t) {
  BigInt scale(1);
  for (const BigRational& x : t.coordinates()) {
    const BigInt den = denominator_of(x);
    scale = scale / gcd(scale, den) * den;
  }
  std::vector<BigInt> out;
  out.reserve(t.coordinates().size());
  for (const BigRational& x : t.coordinates()) out.push_back(numerator_of(x) * (scale / denominator_of(x)));
  return out;
}

template <typename Int>
using DifferenceTable = std::vector<std::vector<Int>>;

template <typename Int>
DifferenceTable<Int> difference_table(const std::vector<BigInt>& coords) {
  const std::size_t size = coords.size();
  DifferenceTable<Int> table(size, std::vector<Int>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const BigInt d = coords[a] - coords[b];
      if constexpr (std::is_same_v<Int, BigInt>) table[a][b] = d;
      else table[a][b] = d.template convert_to<Int>();
    }
  }
  return table;
}

// True when every product the chamber loop forms fits in an int64: each
// e_k(d) e_{n-k}(d) is bounded by C(n, n/2)^2 * max|d|^n.
bool fits_machine_integers(const std::vector<BigInt>& coords, int n) {
  BigInt spread(0);
  for (const BigInt& a : coords) {
    for (const BigInt& b : coords) spread = std::max(spread, BigInt(abs(a - b)));
  }
  BigInt bound = binomial(n, n / 2);
  bound *= bound;
  for (int j = 0; j < n; ++j) bound *= spread;
  return bound < (BigInt(1) << 62);
}

BigRational ratio(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UnsignedWide;

BigInt to_big(Wide x) {
  const bool negative = x < 0;
  const UnsignedWide magnitude = negative ? -static_cast<UnsignedWide>(x) : static_cast<UnsignedWide>(x);
  BigInt out(static_cast<std::uint64_t>(magnitude >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-out) : out;
}

// Sums of fractions num/den. With machine integers the numerators are
// collected per denominator and only the final few hundred groups touch
// rational arithmetic; the (n+1)! chamber terms never do.
template <typename Int>
class FractionSum;

template <>
class FractionSum<BigInt> {
 public:
  void add(const BigInt& num, const BigInt& den) { total_ += ratio(num, den); }
  BigRational value() const { return total_; }

 private:
  BigRational total_{0};
};

template <>
class FractionSum<std::int64_t> {
 public:
  void add(std::int64_t num, std::int64_t den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    groups_[den] += num;
  }
  BigRational value() const {
    BigRational total(0);
    for (const auto& [den, num] : groups_) total += make_rational(to_big(num), BigInt(den));
    return total;
  }

 private:
  std::unordered_map<std::int64_t, Wide> groups_;
};

// Calls visit(d) for every chamber w with w(1) = first + 1, where
// d[i] = t_{w(i+1)} - t_{w(i+2)} (0-based i), in lexicographic order of w.
template <typename Int, typename Visit>
void for_each_chamber_with_first(int n, int first, const DifferenceTable<Int>& diff, Visit&& visit) {
  std::vector<int> rest;
  for (int a = 0; a <= n; ++a) {
    if (a != first) rest.push_back(a);
  }
  std::vector<int> w(static_cast<std::size_t>(n) + 1);
  std::vector<Int> d(static_cast<std::size_t>(n));
  w[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), w.begin() + 1);
    for (int i = 0; i < n; ++i) {
      d[static_cast<std::size_t>(i)] =
          diff[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])]
              [static_cast<std::size_t>(w[static_cast<std::size_t>(i) + 1])];
    }
    visit(d);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

template <typename Int>
BigRational monomial_sum(const ExponentVector& v, const DifferenceTable<Int>& diff,
                         const ExecutionOptions& options) {
  const int n = v.size();
  return ordered_reduce(static_cast<std::size_t>(n) + 1, options, BigRational(0), [&](std::size_t first) {
    FractionSum<Int> local;
    for_each_chamber_with_first<Int>(n, static_cast<int>(first), diff, [&](const std::vector<Int>& d) {
      Int num(1);
      Int den(1);
      for (int i = 0; i < n; ++i) {
        const int e = v.at(i + 1);
        if (e == 2) num *= d[static_cast<std::size_t>(i)];
        else if (e == 0) den *= d[static_cast<std::size_t>(i)];
      }
      local.add(num, den);
    });
    return local.value();
  });
}

template <typename Int>
std::vector<BigRational> chern_sums(int n, const DifferenceTable<Int>& diff,
                                    const ExecutionOptions& options) {
  const std::size_t half = static_cast<std::size_t>(n / 2);
  struct Sums {
    std::vector<BigRational> values;
    Sums& operator+=(const Sums& other) {
      for (std::size_t j = 0; j < values.size(); ++j) values[j] += other.values[j];
      return *this;
    }
  };
  Sums init{std::vector<BigRational>(half + 1, BigRational(0))};
  const Sums total = ordered_reduce(static_cast<std::size_t>(n) + 1, options, std::move(init), [&](std::size_t first) {
    std::vector<FractionSum<Int>> local(half + 1);
    std::vector<Int> e(static_cast<std::size_t>(n) + 1);
    for_each_chamber_with_first<Int>(n, static_cast<int>(first), diff, [&](const std::vector<Int>& d) {
      std::fill(e.begin(), e.end(), Int(0));
      e[0] = 1;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j >= 1; --j) {
          e[static_cast<std::size_t>(j)] += d[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j) - 1];
        }
      }
      const Int& top = e[static_cast<std::size_t>(n)];
      for (std::size_t k = 0; k <= half; ++k) {
        local[k].add(Int(e[k] * e[static_cast<std::size_t>(n) - k]), top);
      }
    });
    Sums out;
    for (const auto& sum : local) out.values.push_back(sum.value());
    return out;
  });

  std::vector<BigRational> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    out[k] = total.values[std::min(k, static_cast<std::size_t>(n) - k)];
  }
  return out;
}

}  // namespace

EvaluationPoint::EvaluationPoint(std::vector<BigRational> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.size() < 2) {
    throw std::invalid_argument("evaluation point needs at least two coordinates");
  }
  auto sorted = coordinates_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegeneratePointError("evaluation point coordinates must be pairwise distinct");
  }
}

EvaluationPoint EvaluationPoint::standard(int n) {
  if (n < 1) throw std::invalid_argument("EvaluationPoint::standard: n must be positive");
  std::vector<BigRational> coords;
  for (int j = 1; j <= n + 1; ++j) coords.emplace_back(j);
  return EvaluationPoint(std::move(coords));
}

EvaluationPoint EvaluationPoint::parse(std::string_view text) {
  std::vector<BigRational> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string token(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - start));
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c) != 0; }),
                token.end());
    const bool well_formed =
        !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
          return std::isdigit(c) != 0 || c == '-' || c == '/';
        });
    if (!well_formed) throw std::invalid_argument("malformed evaluation point '" + std::string(text) + "'");
    try {
      const std::size_t slash = token.find('/');
      if (slash == std::string::npos) coords.emplace_back(BigInt(token));
      else coords.push_back(make_rational(BigInt(token.substr(0, slash)), BigInt(token.substr(slash + 1))));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed coordinate '" + token + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return EvaluationPoint(std::move(coords));
}

std::vector<BigRational> root_values(const Permutation& w, const EvaluationPoint& t) {
  if (w.size() != t.rank() + 1) {
    throw std::invalid_argument("permutation size does not match the evaluation point");
  }
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(t.rank()));
  for (int i = 1; i <= t.rank(); ++i) {
    BigRational d = t.at(w(i)) - t.at(w(i + 1));
    if (d == 0) throw DegeneratePointError("root vanishes at the evaluation point");
    out.push_back(std::move(d));
  }
  return out;
}

BigRational elementary_symmetric(std::span<const BigRational> values, int j) {
  if (j < 0 || j > static_cast<int>(values.size())) {
    throw std::invalid_argument("elementary_symmetric: degree out of range");
  }
  std::vector<BigRational> e(static_cast<std::size_t>(j) + 1, BigRational(0));
  e[0] = 1;
  for (const BigRational& x : values) {
    for (int d = j; d >= 1; --d) e[static_cast<std::size_t>(d)] += x * e[static_cast<std::size_t>(d) - 1];
  }
  return e[static_cast<std::size_t>(j)];
}

BigRational monomial_pairing(const ExponentVector& v, const EvaluationPoint& t,
                             const ExecutionOptions& options) {
  if (!v.is_top_degree()) {
    throw InvalidDegreeError("monomial_pairing requires a degree-n monomial, got " + v.to_string());
  }
  const int n = v.size();
  require_rank(n, t);
  const auto coords = integral_coordinates(t);
  if (fits_machine_integers(coords, n)) {
    return monomial_sum(v, difference_table<std::int64_t>(coords), options);
  }
  return monomial_sum(v, difference_table<BigInt>(coords), options);
}

std::vector<BigRational> chern_pairings(int n, const EvaluationPoint& t, const ExecutionOptions& options) {
  require_rank(n, t);
  const auto coords = integral_coordinates(t);
  if (fits_machine_integers(coords, n)) {
    return chern_sums(n, difference_table<std::int64_t>(coords), options);
  }
  return chern_sums(n, difference_table<BigInt>(coords), options);
}

BigRational chern_pairing(int k, int n, const EvaluationPoint& t, const ExecutionOptions& options) {
  if (!(0 <= k && k <= n)) throw std::invalid_argument("chern_pairing requires 0 <= k <= n");
  return chern_pairings(n, t, options)[static_cast<std::size_t>(k)];
}

}  // namespace permuto
