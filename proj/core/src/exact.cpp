#include "permuto/exact.hpp"

#include <stdexcept>

namespace permuto {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return BigInt(0);
  if (b > a - b) b = a - b;
  BigInt result(1);
  for (std::int64_t j = 0; j < b; ++j) {
    result *= (a - j);
    result /= (j + 1);  // exact: result is C(a, j + 1) here
  }
  return result;
}

BigInt multinomial(std::span<const std::int64_t> parts) {
  BigInt result(1);
  std::int64_t total = 0;
  for (std::int64_t part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

BigInt multinomial(std::initializer_list<std::int64_t> parts) {
  return multinomial(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

BigInt factorial(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result(1);
  for (std::int64_t j = 2; j <= a; ++j) result *= j;
  return result;
}

BigRational power(const BigRational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("power: zero to a negative exponent");
    return power(BigRational(1) / base, -exponent);
  }
  BigRational result(1);
  BigRational factor = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= factor;
    e >>= 1U;
    if (e != 0) factor *= factor;
  }
  return result;
}

BigInt numerator_of(const BigRational& q) {
  return BigInt(boost::multiprecision::numerator(q));
}

BigInt denominator_of(const BigRational& q) {
  return BigInt(boost::multiprecision::denominator(q));
}

bool is_integer(const BigRational& q) { return denominator_of(q) == 1; }

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(num), BigInt(den));
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return BigRational(num, den);
}

std::string to_string(const BigRational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

}  // namespace permuto
