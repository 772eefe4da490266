#include "matchent/numeric.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace matchent {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt result;
  mpz_fac_ui(result.backend().data(), static_cast<unsigned long>(n));
  return result;
}

BigInt falling(std::int64_t n, std::int64_t k) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= (n - i);
  return result;
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return 1;
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return rational_pow(1 / base, -exponent);
  }
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                          static_cast<unsigned>(exponent));
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                          static_cast<unsigned>(exponent));
  return Rational(num, den);
}

double log_bigint(const BigInt& x) {
  if (x <= 0) throw DomainError("log of a non-positive integer");
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, x.backend().data());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

double log_rational(const Rational& x) {
  if (x <= 0) throw DomainError("log of a non-positive rational");
  return log_bigint(boost::multiprecision::numerator(x)) -
         log_bigint(boost::multiprecision::denominator(x));
}

HighReal log_high(const Rational& x) {
  if (x <= 0) throw DomainError("log of a non-positive rational");
  HighReal num(boost::multiprecision::numerator(x));
  HighReal den(boost::multiprecision::denominator(x));
  return boost::multiprecision::log(num) - boost::multiprecision::log(den);
}

double to_double(const Rational& x) { return mpq_get_d(x.backend().data()); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
  Rational r;
  mpq_set_d(r.backend().data(), x);
  return r;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return DomainError("malformed number '" + text + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  std::int64_t scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw bad();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw bad();
    ++pos;
    try {
      std::size_t used = 0;
      scale += std::stoll(s.substr(pos), &used);
      if (pos + used != s.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{BigInt(digits)};
  value *= rational_pow(Rational(10), scale);
  return negative ? Rational(-value) : value;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return x.str();
}

std::string to_decimal(const Rational& x, int digits) {
  HighReal value(boost::multiprecision::numerator(x));
  value /= HighReal(boost::multiprecision::denominator(x));
  return to_decimal(value, digits);
}

std::string to_decimal(const HighReal& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

}  // namespace matchent
