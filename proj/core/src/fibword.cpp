#include "zeck/fibword.hpp"

#include "zeck/codec.hpp"
#include "zeck/error.hpp"
#include "zeck/fib.hpp"

namespace zeck {

// f^n(a) = f^{n-1}(a) f^{n-2}(a)
FibWord morphism_iterate(std::size_t n) {
  FibWord prev = "a";
  if (n == 0) return prev;
  FibWord cur = "ab";
  for (std::size_t i = 1; i < n; ++i) {
    FibWord next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FibWord fibonacci_prefix(std::size_t length) {
  FibWord prev = "a";
  FibWord cur = "ab";
  if (length <= 1) return prev;
  while (cur.size() < length) {
    FibWord next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FibWord occurrence_coding(const DigitBlock& w, std::size_t n) {
  const std::size_t m = w.length();
  if (m < 2 || w.leading() != 0) throw RangeError("occurrence coding needs |w| >= 2 and w_{m-1} = 0");
  if (n < 3) throw RangeError("occurrence coding needs n >= 3");
  const std::size_t range = m + n;
  const Integer end = fib(range);
  const std::string zero_w = "0" + w.str();
  const std::string one_w = "1" + w.str();
  FibWord coding;
  for (Integer value = 0; value < end; ++value) {
    const std::string digits = encode_padded(value, range).digits();
    const std::string tail = digits.substr(digits.size() - (m + 1));
    if (tail == zero_w) {
      coding += 'a';
    } else if (tail == one_w) {
      coding += 'b';
    }
  }
  return coding;
}

std::vector<std::size_t> positions_of(char letter, const FibWord& word) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == letter) out.push_back(i + 1);
  }
  return out;
}

}  // namespace zeck
