#include "zeck/codec.hpp"

#include <array>
#include <limits>

#include "zeck/error.hpp"

namespace zeck {
namespace {

constexpr std::size_t kMaxSmallDigits = 92;

// Digits of a 64-bit value, least significant first; returns the digit count.
std::size_t small_digits(std::uint64_t n, std::array<unsigned char, kMaxSmallDigits>& out) {
  static const auto kWeights = [] {
    std::array<std::uint64_t, kMaxSmallDigits> w{};
    w[0] = 1;
    w[1] = 2;
    for (std::size_t i = 2; i < kMaxSmallDigits; ++i) w[i] = w[i - 1] + w[i - 2];
    return w;
  }();
  if (n == 0) {
    out[0] = 0;
    return 1;
  }
  std::size_t top = 0;
  while (top + 1 < kMaxSmallDigits && kWeights[top + 1] <= n) ++top;
  for (std::size_t i = top + 1; i-- > 0;) {
    if (kWeights[i] <= n) {
      out[i] = 1;
      n -= kWeights[i];
    } else {
      out[i] = 0;
    }
  }
  return top + 1;
}

bool fits_u64(const Integer& v) { return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max(); }

std::string big_digits(Integer n) {
  std::size_t top = 0;
  while (fib_shifted(top + 1) <= n) ++top;
  std::string digits;
  digits.reserve(top + 1);
  for (std::size_t i = top + 1; i-- > 0;) {
    const Integer w = fib_shifted(i);
    if (w <= n) {
      digits.push_back('1');
      n -= w;
    } else {
      digits.push_back('0');
    }
  }
  return digits;
}

void require_natural(const Integer& v) {
  if (v < 0) throw RangeError("negative integers have no Zeckendorf expansion");
}

}  // namespace

Integer RangeTag::lower() const { return kind == RangeKind::lambda ? fib(n) : Integer(0); }

Integer RangeTag::upper() const { return kind == RangeKind::lambda ? fib(n + 1) : fib(n); }

ZeckExpansion encode(const Integer& value) {
  require_natural(value);
  if (fits_u64(value)) {
    std::array<unsigned char, kMaxSmallDigits> buf{};
    const std::size_t len = small_digits(static_cast<std::uint64_t>(value), buf);
    std::string digits(len, '0');
    for (std::size_t i = 0; i < len; ++i) digits[len - 1 - i] = static_cast<char>('0' + buf[i]);
    return {std::move(digits), value};
  }
  return {big_digits(value), value};
}

Integer decode(std::string_view digits) {
  if (!DigitBlock::is_valid(digits)) {
    throw InvalidWord("not a Zeckendorf word: \"" + std::string(digits) + "\"");
  }
  Integer sum = 0;
  const std::size_t len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (digits[len - 1 - i] == '1') sum += fib_shifted(i);
  }
  return sum;
}

ZeckExpansion encode_padded(const Integer& value, std::size_t n) {
  if (n < 2) throw RangeError("padded expansion needs n >= 2");
  require_natural(value);
  if (value >= fib(n)) throw RangeError("value " + value.str() + " is outside Psi_" + std::to_string(n));
  const std::size_t width = n - 2;
  if (value == 0) return {std::string(width, '0'), value};
  std::string digits = encode(value).digits();
  digits.insert(0, width - digits.size(), '0');
  return {std::move(digits), value};
}

bool block_at(const Integer& value, const DigitBlock& w, std::size_t k) {
  require_natural(value);
  const std::size_t m = w.length();
  if (fits_u64(value)) {
    std::array<unsigned char, kMaxSmallDigits> buf{};
    const std::size_t len = small_digits(static_cast<std::uint64_t>(value), buf);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t pos = k + i;
      const int d = pos < len ? buf[pos] : 0;
      if (d != w.bit(i)) return false;
    }
    return true;
  }
  const ZeckExpansion z = encode(value);
  for (std::size_t i = 0; i < m; ++i) {
    if (z.digit(k + i) != w.bit(i)) return false;
  }
  return true;
}

std::size_t lambda_index(const Integer& value) {
  if (value < 1) throw RangeError("Lambda_n only covers N >= 1");
  return encode(value).size() + 1;
}

}  // namespace zeck
