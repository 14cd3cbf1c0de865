#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Fibonacci number F_n with F_0 = 0, F_1 = F_2 = 1.
Integer fib(std::size_t n);

/// Fibonacci number with F_{-1} = 1, so that every index >= -1 is valid.
Integer fib_signed(std::int64_t n);

/// Twice shifted Fibonacci number F_{i+2}: the weight of Zeckendorf digit i.
inline Integer fib_shifted(std::size_t i) { return fib(i + 2); }

/// Exact element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y);
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y);
  friend GoldenNumber operator-(const GoldenNumber& x);
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y);
  friend GoldenNumber operator*(const Integer& c, const GoldenNumber& x);
  GoldenNumber& operator+=(const GoldenNumber& y) { return *this = *this + y; }

  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

  /// Sign of a + b*phi: -1, 0 or +1.
  int sign() const;

  /// Decimal expansion truncated toward -infinity after `digits` places.
  std::string to_decimal(unsigned digits) const;

  /// Display-only approximation.
  double approx() const;

 private:
  Integer a_{0};
  Integer b_{0};
};

/// phi^m for any integer m, exactly.
GoldenNumber phi_pow(std::int64_t m);

/// Exact order of x against the rational q.
std::strong_ordering golden_cmp(const GoldenNumber& x, const Rational& q);

/// Exact order of two golden numbers.
std::strong_ordering golden_cmp(const GoldenNumber& x, const GoldenNumber& y);

/// floor(t * phi) for any integer t.
Integer floor_mul_phi(const Integer& t);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
std::uint64_t isqrt(std::uint64_t n);

std::string to_string(const GoldenNumber& x);

}  // namespace zeck
