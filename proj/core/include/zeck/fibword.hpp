#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zeck/digit_block.hpp"

namespace zeck {

/// Word over {a, b}.
using FibWord = std::string;

/// f^n(a) for the Fibonacci morphism f(a) = ab, f(b) = a.
FibWord morphism_iterate(std::size_t n);

/// Shortest iterate f^n(a) with at least `length` letters.
FibWord fibonacci_prefix(std::size_t length);

/// Scans N = 0 .. F_{m+n} - 1 in order and records 'a' for each Z*(N) ending
/// in 0w and 'b' for each ending in 1w. Requires w_{m-1} = 0, m >= 2, n >= 3;
/// throws RangeError otherwise.
FibWord occurrence_coding(const DigitBlock& w, std::size_t n);

/// 1-based positions of `letter` in `word`.
std::vector<std::size_t> positions_of(char letter, const FibWord& word);

}  // namespace zeck
