#include "zeck/digit_block.hpp"

#include <algorithm>

#include "zeck/error.hpp"

namespace zeck {

bool DigitBlock::is_valid(std::string_view msb_first) noexcept {
  if (!std::all_of(msb_first.begin(), msb_first.end(), [](char c) { return c == '0' || c == '1'; })) {
    return false;
  }
  return msb_first.find("11") == std::string_view::npos;
}

DigitBlock DigitBlock::parse(std::string_view msb_first) {
  if (!is_valid(msb_first)) {
    throw InvalidWord("not a Zeckendorf digit block: \"" + std::string(msb_first) + "\"");
  }
  return DigitBlock(std::string(msb_first));
}

DigitBlock DigitBlock::zeros(std::size_t m) { return DigitBlock(std::string(m, '0')); }

int DigitBlock::bit(std::size_t i) const {
  if (i >= bits_.size()) throw RangeError("digit index past the end of the block");
  return bits_[bits_.size() - 1 - i] - '0';
}

bool DigitBlock::all_zero() const noexcept {
  return bits_.find('1') == std::string::npos;
}

DigitBlock DigitBlock::extend_left(int digit) const {
  if (digit != 0 && digit != 1) throw InvalidWord("digit must be 0 or 1");
  if (digit == 1 && !bits_.empty() && bits_.front() == '1') {
    throw InvalidWord("extending \"" + bits_ + "\" by 1 creates \"11\"");
  }
  return DigitBlock(static_cast<char>('0' + digit) + bits_);
}

DigitBlock DigitBlock::append_zeros(std::size_t k) const { return DigitBlock(bits_ + std::string(k, '0')); }

std::vector<DigitBlock> all_blocks(std::size_t m) {
  std::vector<DigitBlock> level{DigitBlock()};
  for (std::size_t len = 0; len < m; ++len) {
    std::vector<DigitBlock> next;
    next.reserve(level.size() * 2);
    for (const auto& w : level) {
      next.push_back(w.extend_left(0));
      if (w.empty() || w.leading() == 0) next.push_back(w.extend_left(1));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace zeck
