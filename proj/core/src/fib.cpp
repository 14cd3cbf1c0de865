#include "zeck/fib.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace zeck {
namespace {

constexpr std::size_t kSmallFibCount = 94;  // F_93 is the last to fit in 64 bits

constexpr std::array<std::uint64_t, kSmallFibCount> make_small_fibs() {
  std::array<std::uint64_t, kSmallFibCount> f{};
  f[0] = 0;
  f[1] = 1;
  for (std::size_t i = 2; i < kSmallFibCount; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

constexpr auto kSmallFibs = make_small_fibs();

// (F_n, F_{n+1}) by fast doubling.
std::pair<Integer, Integer> fib_pair(std::size_t n) {
  if (n + 1 < kSmallFibCount) return {Integer(kSmallFibs[n]), Integer(kSmallFibs[n + 1])};
  auto [fk, fk1] = fib_pair(n / 2);
  Integer even = fk * (2 * fk1 - fk);
  Integer odd = fk * fk + fk1 * fk1;
  if (n % 2 == 0) return {std::move(even), std::move(odd)};
  Integer next = even + odd;
  return {std::move(odd), std::move(next)};
}

// Sign of b*sqrt(5) - c.
int sign_sqrt5_minus(const Integer& b, const Integer& c) {
  const int sb = b.sign();
  const int sc = c.sign();
  if (sb >= 0 && sc <= 0) return (sb == 0 && sc == 0) ? 0 : 1;
  if (sb <= 0 && sc >= 0) return -1;
  const Integer lhs = 5 * b * b;
  const Integer rhs = c * c;
  // sqrt 5 is irrational, so lhs != rhs here.
  if (sb > 0) return lhs > rhs ? 1 : -1;
  return lhs > rhs ? -1 : 1;
}

std::strong_ordering ordering_from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Integer fib(std::size_t n) {
  if (n < kSmallFibCount) return Integer(kSmallFibs[n]);
  return fib_pair(n).first;
}

Integer fib_signed(std::int64_t n) {
  if (n < -1) throw std::invalid_argument("fib_signed: index below -1");
  if (n == -1) return Integer(1);
  return fib(static_cast<std::size_t>(n));
}

GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
  return {x.a_ + y.a_, x.b_ + y.b_};
}

GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
  return {x.a_ - y.a_, x.b_ - y.b_};
}

GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }

// (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi, using phi^2 = phi + 1.
GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
  const Integer bd = x.b_ * y.b_;
  return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
}

GoldenNumber operator*(const Integer& c, const GoldenNumber& x) { return {c * x.a_, c * x.b_}; }

int GoldenNumber::sign() const {
  if (b_ == 0) return a_.sign();
  // a + b phi > 0  <=>  b sqrt5 > -(2a + b)
  return sign_sqrt5_minus(b_, -(2 * a_ + b_));
}

std::string GoldenNumber::to_decimal(unsigned digits) const {
  Integer scale = boost::multiprecision::pow(Integer(10), digits);
  Integer scaled = scale * a_ + floor_mul_phi(scale * b_);
  const bool negative = scaled < 0;
  Integer magnitude = negative ? Integer(-scaled) : scaled;
  std::string body = magnitude.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

double GoldenNumber::approx() const { return std::stod(to_decimal(24)); }

GoldenNumber phi_pow(std::int64_t m) {
  if (m >= 0) return {fib_signed(m - 1), fib(static_cast<std::size_t>(m))};
  // phi^-n = (-1)^n (F_{n+1} - F_n phi)
  const auto n = static_cast<std::size_t>(-m);
  GoldenNumber v{fib(n + 1), -fib(n)};
  return n % 2 == 0 ? v : -v;
}

std::strong_ordering golden_cmp(const GoldenNumber& x, const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);  // positive
  const GoldenNumber diff{den * x.a() - num, den * x.b()};
  return ordering_from_sign(diff.sign());
}

std::strong_ordering golden_cmp(const GoldenNumber& x, const GoldenNumber& y) {
  return ordering_from_sign((x - y).sign());
}

Integer floor_mul_phi(const Integer& t) {
  if (t == 0) return 0;
  if (t > 0) return (t + isqrt(Integer(5 * t * t))) / 2;
  const Integer u = -t;
  return -((u + isqrt(Integer(5 * u * u))) / 2) - 1;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  if (n < 2) return n;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return Integer(isqrt(static_cast<std::uint64_t>(n)));
  }
  // Newton iteration from an initial guess above the root.
  const auto bits = boost::multiprecision::msb(n);
  Integer x = Integer(1) << (bits / 2 + 1);
  while (true) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFull;
  if (r > kMaxRoot) r = kMaxRoot;
  while (r * r > n) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string to_string(const GoldenNumber& x) {
  std::string out = x.a().str();
  if (x.b() >= 0) out += '+';
  out += x.b().str();
  out += "*phi";
  return out;
}

}  // namespace zeck
