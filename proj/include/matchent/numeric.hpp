#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchent {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// 100 significant decimal digits; used for log-space certificate evaluation.
using HighReal = boost::multiprecision::mpfr_float_100;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
// n (n-1) ... (n-k+1)
BigInt falling(std::int64_t n, std::int64_t k);

Rational rational_pow(const Rational& base, std::int64_t exponent);

// Natural log of a positive integer without overflow, in double precision.
double log_bigint(const BigInt& x);
double log_rational(const Rational& x);
HighReal log_high(const Rational& x);

double to_double(const Rational& x);
Rational from_double(double x);
// Parses "3/7", "0.25", "-2", "1e-3" into an exact rational (decimal literals
// are exact, not rounded through binary floating point).
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& x, int digits = 20);
std::string to_decimal(const HighReal& x, int digits = 20);

}  // namespace matchent
