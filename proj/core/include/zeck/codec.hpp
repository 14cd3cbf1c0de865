#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "zeck/digit_block.hpp"
#include "zeck/fib.hpp"

namespace zeck {

/// Zeckendorf digits of a natural number, most-significant digit first.
class ZeckExpansion {
 public:
  ZeckExpansion(std::string digits, Integer value) : digits_(std::move(digits)), value_(std::move(value)) {}

  const std::string& digits() const noexcept { return digits_; }
  const Integer& value() const noexcept { return value_; }
  std::size_t size() const noexcept { return digits_.size(); }

  /// Digit d_i; positions past the stored width read as 0.
  int digit(std::size_t i) const noexcept {
    return i < digits_.size() ? digits_[digits_.size() - 1 - i] - '0' : 0;
  }

 private:
  std::string digits_;
  Integer value_;
};

enum class RangeKind { lambda, psi };

/// Lambda_n = [F_n, F_{n+1}) or Psi_n = [0, F_n), n >= 2.
struct RangeTag {
  std::size_t n = 2;
  RangeKind kind = RangeKind::psi;

  Integer lower() const;
  Integer upper() const;  // exclusive
  bool contains(const Integer& value) const { return value >= lower() && value < upper(); }
};

/// Greedy expansion; encode(0) is "0". Throws RangeError for negative input.
ZeckExpansion encode(const Integer& value);

/// Sum of d_i F_{i+2}. Leading zeros and the empty word are accepted.
/// Throws InvalidWord on "11" or on characters other than '0'/'1'.
Integer decode(std::string_view digits);

/// Z*(N): encode(N) left-padded with zeros to length n - 2.
/// Requires n >= 2 and 0 <= N < F_n, otherwise throws RangeError.
ZeckExpansion encode_padded(const Integer& value, std::size_t n);

/// True iff d_{k+m-1} ... d_k of N equal w (expansion padded with zeros).
bool block_at(const Integer& value, const DigitBlock& w, std::size_t k);

/// The n >= 2 with N in Lambda_n, for N >= 1.
std::size_t lambda_index(const Integer& value);

}  // namespace zeck
