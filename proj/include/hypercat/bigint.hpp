#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercat {

// Expression templates off: `auto` then always holds a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
/// Natural-valued BigInt. Same representation, used where the result is never negative.
using BigNat = BigInt;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// n! from a process-wide memo table. Thread safe.
inline BigInt factorial(std::size_t n) {
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    const auto i = table.size();
    table.push_back(table.back() * i);
  }
  return table[n];
}

/// Divides and insists the division is exact. A nonzero remainder means a
/// closed form was restructured incorrectly, so it is a logic error.
inline BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator,
                             const char* what) {
  if (denominator == 0) {
    throw std::logic_error(std::string(what) + ": division by zero");
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(what) + ": inexact division");
  }
  return quotient;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return exact_quotient(factorial(n), factorial(k) * factorial(n - k), "binomial");
}

/// (p0 + p1 + ...)! / (p0! p1! ...)
inline BigInt multinomial(std::span<const std::size_t> parts) {
  std::size_t total = 0;
  BigInt denominator = 1;
  for (auto p : parts) {
    total += p;
    denominator *= factorial(p);
  }
  return exact_quotient(factorial(total), denominator, "multinomial");
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Fixed-point decimal rendering of an exact rational, truncated toward zero
/// after `digits` fractional digits. No floating point is involved.
inline std::string to_decimal(const Rational& value, unsigned digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(value);
  const BigInt den = denominator(value);
  std::string out;
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt scaled = (num * scale) / den;
  std::string body = scaled.str();
  if (digits == 0) return out + body;
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  // A value that truncates to zero prints unsigned.
  if (scaled == 0 && !out.empty()) out.clear();
  return out + body;
}

}  // namespace hypercat
