#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zeck/beatty.hpp"
#include "zeck/fib.hpp"

namespace zeck {

/// Composition of the Wythoff sequences A and B plus an integer shift.
///
/// Letters apply right to left: "AB" is n -> A(B(n)). The empty word is the
/// identity, so ("", -1) is n -> n - 1.
class WythoffWord {
 public:
  WythoffWord() = default;

  /// Throws InvalidWord on letters other than 'A' and 'B'.
  explicit WythoffWord(std::string letters, Integer shift = 0);

  /// Parses "BBA", "A^3-1", "AB^2A+4", "Id-1". Accepts ASCII '-' and U+2212.
  static WythoffWord parse(std::string_view text);

  const std::string& letters() const noexcept { return letters_; }
  const Integer& shift() const noexcept { return shift_; }
  std::size_t count_A() const noexcept;
  std::size_t count_B() const noexcept;

  /// (U + c)∘X = U∘X + c for a letter X.
  WythoffWord then(char letter) const;

  friend bool operator==(const WythoffWord&, const WythoffWord&) = default;

 private:
  std::string letters_;
  Integer shift_{0};
};

enum class WordNotation { expanded, compact };

/// "ABA", "AAA-1"; compact notation writes runs as powers, "A^3-1".
std::string to_string(const WythoffWord& u, WordNotation notation = WordNotation::expanded);

/// Nested application of the letters, then the shift. n >= 1.
Integer direct_eval(const WythoffWord& u, const Integer& n);

/// lambda_U in U(n) = F_{i+2j} A(n) + F_{i+2j-1} n - lambda_U (letters only).
Integer csh_lambda(const WythoffWord& u);

/// Closed GBS form of a non-empty word. The shift is carried into r.
GBS csh_reduce(const WythoffWord& u);

/// W(n, m) = F_{m+1} A(n) + (n - 1) F_m.
Integer wythoff_array(const Integer& n, std::size_t m);

using IdentitySide = std::variant<WythoffWord, GBS>;

Integer evaluate(const IdentitySide& side, const Integer& n);
std::string to_string(const IdentitySide& side);

/// One instance of a sequence identity, left(n) = right(n) for all n >= 1.
struct Identity {
  std::string name;
  std::int64_t m = 0;
  IdentitySide left;
  IdentitySide right;
};

/// All catalogued identities for parameters m in [m_min, m_max]; families
/// whose statement needs m >= 1 skip m = 0.
std::vector<Identity> identity_catalog(std::int64_t m_min, std::int64_t m_max);

/// Smallest n in [1, n_max] with left(n) != right(n), if any.
std::optional<Integer> first_mismatch(const Identity& id, const Integer& n_max);

}  // namespace zeck
