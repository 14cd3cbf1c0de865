#include "zeck/wythoff.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>

#include "zeck/error.hpp"
#include "zeck/solver.hpp"

namespace zeck {
namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      out += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out += text[i];
    }
  }
  return out;
}

std::size_t read_count(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw InvalidWord("expected a digit at offset " + std::to_string(start) + " in \"" + s + "\"");
  return std::stoul(s.substr(start, pos - start));
}

std::string power(char letter, std::size_t k) { return std::string(k, letter); }

std::string shift_suffix(const Integer& shift) {
  if (shift == 0) return "";
  return (shift > 0 ? "+" : "") + shift.str();
}

}  // namespace

WythoffWord::WythoffWord(std::string letters, Integer shift) : letters_(std::move(letters)), shift_(std::move(shift)) {
  if (!std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == 'A' || c == 'B'; })) {
    throw InvalidWord("Wythoff words use only the letters A and B: \"" + letters_ + "\"");
  }
}

WythoffWord WythoffWord::parse(std::string_view text) {
  const std::string s = normalize_minus(text);
  if (s.empty()) throw InvalidWord("empty Wythoff word; write Id for the identity");
  std::string letters;
  std::size_t pos = 0;
  if (s.compare(0, 2, "Id") == 0) {
    pos = 2;
  } else {
    while (pos < s.size() && (s[pos] == 'A' || s[pos] == 'B')) {
      const char letter = s[pos++];
      std::size_t reps = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        reps = read_count(s, pos);
      }
      letters += power(letter, reps);
    }
    if (pos == 0) throw InvalidWord("cannot parse Wythoff word \"" + s + "\"");
  }
  Integer shift = 0;
  if (pos < s.size()) {
    const char sign = s[pos];
    if (sign != '+' && sign != '-') throw InvalidWord("unexpected '" + std::string(1, sign) + "' in \"" + s + "\"");
    ++pos;
    const std::size_t start = pos;
    read_count(s, pos);
    if (pos != s.size()) throw InvalidWord("trailing characters in \"" + s + "\"");
    shift = Integer(s.substr(start));
    if (sign == '-') shift = -shift;
  }
  return WythoffWord(std::move(letters), std::move(shift));
}

std::size_t WythoffWord::count_A() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'A'));
}

std::size_t WythoffWord::count_B() const noexcept { return letters_.size() - count_A(); }

WythoffWord WythoffWord::then(char letter) const { return WythoffWord(letters_ + letter, shift_); }

std::string to_string(const WythoffWord& u, WordNotation notation) {
  if (u.letters().empty()) return "Id" + shift_suffix(u.shift());
  std::string out;
  if (notation == WordNotation::expanded) {
    out = u.letters();
  } else {
    const std::string& l = u.letters();
    for (std::size_t i = 0; i < l.size();) {
      std::size_t j = i;
      while (j < l.size() && l[j] == l[i]) ++j;
      out += l[i];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out + shift_suffix(u.shift());
}

Integer direct_eval(const WythoffWord& u, const Integer& n) {
  if (n < 1) throw RangeError("sequence index must be >= 1, got " + n.str());
  Integer x = n;
  const std::string& l = u.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) x = (*it == 'A') ? wythoff_A(x) : wythoff_B(x);
  return x + u.shift();
}

Integer csh_lambda(const WythoffWord& u) {
  if (u.letters().empty()) throw RangeError("the closed form needs at least one letter");
  const std::size_t s = u.count_A() + 2 * u.count_B();
  // A(1) = 1, so F_s A(1) + F_{s-1} = F_{s+1}.
  return fib(s + 1) - direct_eval(WythoffWord(u.letters()), 1);
}

GBS csh_reduce(const WythoffWord& u) {
  const std::size_t s = u.count_A() + 2 * u.count_B();
  Integer lambda = csh_lambda(u);
  return {fib(s), fib(s - 1), u.shift() - lambda};
}

Integer wythoff_array(const Integer& n, std::size_t m) {
  return fib(m + 1) * wythoff_A(n) + (n - 1) * fib(m);
}

Integer evaluate(const IdentitySide& side, const Integer& n) {
  return std::visit(
      [&n](const auto& s) -> Integer {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GBS>) {
          return gbs_eval(s, n);
        } else {
          return direct_eval(s, n);
        }
      },
      side);
}

std::string to_string(const IdentitySide& side) {
  return std::visit([](const auto& s) { return to_string(s); }, side);
}

std::vector<Identity> identity_catalog(std::int64_t m_min, std::int64_t m_max) {
  std::vector<Identity> out;
  auto word = [](const std::string& letters, int shift = 0) { return WythoffWord(letters, shift); };
  auto block_gbs = [](const std::string& w) { return solve_block(DigitBlock::parse(w)).gbs; };
  for (std::int64_t m = std::max<std::int64_t>(m_min, 0); m <= m_max; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const std::string Bm = power('B', um);
    const std::string Bm1 = power('B', um + 1);
    const std::string even_zeros = power('0', 2 * um);
    const std::string odd_zeros = power('0', 2 * um + 1);
    if (m >= 1) {
      const GBS lower_power{fib(um), fib(um - 1), -fib(um + 1)};
      out.push_back({"A^m-1 = F_m A + F_{m-1} Id - F_{m+1}", m, word(power('A', um), -1), lower_power});
      out.push_back({"(A^m-1)A = A^{m+1}-1", m, compose_A(lower_power), word(power('A', um + 1), -1)});
      out.push_back({"(A^{2m-1}-1)B = B^m A", m, word(power('A', 2 * um - 1) + "B", -1), word(Bm + "A")});
      out.push_back({"(A^{2m}-1)B = A B^m A", m, word(power('A', 2 * um) + "B", -1), word("A" + Bm + "A")});
      out.push_back({"C(0^m) = A^m-1", m, block_gbs(power('0', um)), word(power('A', um), -1)});
    }
    out.push_back({"C(10^{2m+1}) = B^{m+1}A", m, block_gbs("1" + odd_zeros), word(Bm1 + "A")});
    out.push_back({"C(10^{2m}) = A B^m A", m, block_gbs("1" + even_zeros), word("A" + Bm + "A")});
    out.push_back({"C(0010^{2m+1}) = B^{m+1}AA", m, block_gbs("001" + odd_zeros), word(Bm1 + "AA")});
    out.push_back({"C(0010^{2m}) = A B^m AA", m, block_gbs("001" + even_zeros), word("A" + Bm + "AA")});
    out.push_back({"C(1010^{2m+1}) = B^{m+1}AB", m, block_gbs("101" + odd_zeros), word(Bm1 + "AB")});
    out.push_back({"C(1010^{2m}) = A B^m AB", m, block_gbs("101" + even_zeros), word("A" + Bm + "AB")});
  }
  return out;
}

std::optional<Integer> first_mismatch(const Identity& id, const Integer& n_max) {
  for (Integer n = 1; n <= n_max; ++n) {
    if (evaluate(id.left, n) != evaluate(id.right, n)) return n;
  }
  return std::nullopt;
}

}  // namespace zeck
