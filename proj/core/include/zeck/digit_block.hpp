#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zeck {

/// A finite 0/1 word without "11", written most-significant digit first.
///
/// Digits are addressed by subscript: bit(0) is w_0, the last character of
/// str(); bit(length() - 1) is w_{m-1}, the first character. The empty block
/// is the root of the Fibonacci tree.
class DigitBlock {
 public:
  DigitBlock() = default;

  /// Throws InvalidWord on characters other than '0'/'1' or on "11".
  static DigitBlock parse(std::string_view msb_first);

  static bool is_valid(std::string_view msb_first) noexcept;

  /// m zeros.
  static DigitBlock zeros(std::size_t m);

  std::size_t length() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  const std::string& str() const noexcept { return bits_; }

  int bit(std::size_t i) const;
  int leading() const { return bit(length() - 1); }
  int trailing() const { return bit(0); }
  bool all_zero() const noexcept;

  /// The block d·w. Throws InvalidWord when that would create "11".
  DigitBlock extend_left(int digit) const;

  /// The block w·0^k.
  DigitBlock append_zeros(std::size_t k) const;

  friend auto operator<=>(const DigitBlock&, const DigitBlock&) = default;
  friend bool operator==(const DigitBlock&, const DigitBlock&) = default;

 private:
  explicit DigitBlock(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

/// Every valid block of length m, in lexicographic order of str().
std::vector<DigitBlock> all_blocks(std::size_t m);

}  // namespace zeck
