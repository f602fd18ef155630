#pragma once

// Exact integer and rational arithmetic plus the combinatorial number
// functions shared by every other part of the library.
//
// BigInt and BigRational are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, so `auto` always yields a value. Rationals
// are kept in lowest terms with a positive denominator after every operation.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace permuto {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Binomial coefficient with the combinatorial convention: zero whenever
/// a < 0, b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// (sum of parts)! / prod(part!). Throws std::invalid_argument on a
/// negative part.
BigInt multinomial(std::span<const std::int64_t> parts);
BigInt multinomial(std::initializer_list<std::int64_t> parts);

/// a!; throws std::invalid_argument for a < 0.
BigInt factorial(std::int64_t a);

/// base^exponent for any integer exponent (negative exponents invert).
BigRational power(const BigRational& base, int exponent);

BigInt numerator_of(const BigRational& q);
BigInt denominator_of(const BigRational& q);
bool is_integer(const BigRational& q);

BigRational make_rational(std::int64_t num, std::int64_t den = 1);
BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// (-1)^e as a machine integer.
constexpr int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace permuto
