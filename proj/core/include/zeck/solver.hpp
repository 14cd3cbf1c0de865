#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zeck/beatty.hpp"
#include "zeck/digit_block.hpp"
#include "zeck/fib.hpp"
#include "zeck/wythoff.hpp"

namespace zeck {

/// How a solution relates to the compound-Wythoff statement.
enum class SolutionKind {
  compound,              // R_w = C_w, a pure composition of A and B
  upper_minus_one,       // w = 1: R_w = B - 1, stored as AA
  lower_power_minus_one, // w = 0^m: R_w = A^m - 1
  root,                  // empty word: every N, n -> n - 1 (an extension)
};

const char* to_string(SolutionKind kind);

/// Closed forms for R_w, the increasing sequence of N whose expansion ends in w.
struct BlockSolution {
  DigitBlock word;
  WythoffWord compound;
  GBS gbs;
  Integer gamma;
  SolutionKind kind = SolutionKind::compound;
};

/// gamma_w = -(1 + sum of F_k over 0 < k < m with w_k w_{k-1} = 00).
Integer gamma_offset(const DigitBlock& w);

/// Compound Wythoff and generalized Beatty forms of R_w. The empty word
/// yields the root solution.
BlockSolution solve_block(const DigitBlock& w);

/// Compound form as printed on the tree: "B-1=AA" for w = 1, the empty-set
/// sign for the root.
std::string render_compound(const BlockSolution& s);
std::string render_gbs(const BlockSolution& s);

struct TreeNode {
  BlockSolution solution;
  std::vector<TreeNode> children;  // 0w first, then 1w when w does not start with 1
};

inline constexpr std::size_t kDefaultTreeDepthLimit = 20;

/// The Fibonacci tree down to `depth`. Throws RangeError above `depth_limit`.
TreeNode fibonacci_tree(std::size_t depth, std::size_t depth_limit = kDefaultTreeDepthLimit);

/// Solutions for all valid words of length m.
std::vector<BlockSolution> tree_level(std::size_t m);

/// R_w^{(k)}: the N with d_{k+m-1} ... d_k = w, as F_{k+2-w_0} GBS branches.
/// Throws RangeError for the empty word.
OccurrenceSet solve_positional(const DigitBlock& w, std::size_t k);

/// Exact density F_{k+2-w_0} phi^{-k-m-w_{m-1}}.
struct DensityValue {
  GoldenNumber value;
  Integer coefficient;
  std::size_t coefficient_index = 0;  // coefficient = F_{coefficient_index}
  std::int64_t exponent = 0;
};

/// Throws RangeError for the empty word.
DensityValue density(const DigitBlock& w, std::size_t k);

/// Sum of density(w, k) over all valid w of length m.
GoldenNumber density_total(std::size_t m, std::size_t k);

}  // namespace zeck
