#include "zeck/solver.hpp"

#include "zeck/error.hpp"

namespace zeck {
namespace {

const char* const kEmptySet = "\xE2\x88\x85";

// Builds C_w by reading w from w_0 upward, one left extension at a time.
WythoffWord compound_word(const DigitBlock& w) {
  const std::size_t m = w.length();
  WythoffWord c = w.trailing() == 0 ? WythoffWord("A", -1) : WythoffWord("AA");
  std::size_t zero_run = w.trailing() == 0 ? 1 : 0;  // length of a leading 0^j while c = A^j - 1
  for (std::size_t i = 1; i < m; ++i) {
    const int below = w.bit(i - 1);
    const int digit = w.bit(i);
    if (below == 1) continue;  // 1u extends only to 01u, with the same occurrences
    if (digit == 0) {
      c = c.then('A');
      if (zero_run > 0) ++zero_run;
      continue;
    }
    if (zero_run > 0) {
      // (A^{2j-1} - 1)B = B^j A and (A^{2j} - 1)B = A B^j A
      const std::size_t half = (zero_run + 1) / 2;
      std::string letters = std::string(half, 'B') + "A";
      if (zero_run % 2 == 0) letters.insert(0, "A");
      c = WythoffWord(std::move(letters));
      zero_run = 0;
    } else {
      c = c.then('B');
    }
  }
  return c;
}

void require_non_empty(const DigitBlock& w) {
  if (w.empty()) throw RangeError("this query needs a non-empty digit block");
}

TreeNode grow(const DigitBlock& w, std::size_t remaining) {
  TreeNode node{solve_block(w), {}};
  if (remaining == 0) return node;
  node.children.push_back(grow(w.extend_left(0), remaining - 1));
  if (w.empty() || w.leading() == 0) node.children.push_back(grow(w.extend_left(1), remaining - 1));
  return node;
}

}  // namespace

const char* to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::compound:
      return "compound";
    case SolutionKind::upper_minus_one:
      return "upper-minus-one";
    case SolutionKind::lower_power_minus_one:
      return "lower-power-minus-one";
    case SolutionKind::root:
      return "root";
  }
  return "unknown";
}

Integer gamma_offset(const DigitBlock& w) {
  Integer sum = 1;
  for (std::size_t k = 1; k < w.length(); ++k) {
    if (w.bit(k) == 0 && w.bit(k - 1) == 0) sum += fib(k);
  }
  return -sum;
}

BlockSolution solve_block(const DigitBlock& w) {
  if (w.empty()) {
    return {w, WythoffWord("", -1), GBS{0, 1, -1}, Integer(-1), SolutionKind::root};
  }
  const std::size_t m = w.length();
  const auto lead = static_cast<std::size_t>(w.leading());
  Integer gamma = gamma_offset(w);
  GBS gbs{fib(m + lead), fib(m - 1 + lead), gamma};
  SolutionKind kind = SolutionKind::compound;
  if (w.all_zero()) {
    kind = SolutionKind::lower_power_minus_one;
  } else if (w.str() == "1") {
    kind = SolutionKind::upper_minus_one;
  }
  return {w, compound_word(w), std::move(gbs), std::move(gamma), kind};
}

std::string render_compound(const BlockSolution& s) {
  switch (s.kind) {
    case SolutionKind::root:
      return kEmptySet;
    case SolutionKind::upper_minus_one:
      return "B-1=" + to_string(s.compound);
    default:
      return to_string(s.compound);
  }
}

std::string render_gbs(const BlockSolution& s) {
  return s.kind == SolutionKind::root ? kEmptySet : to_string(s.gbs);
}

TreeNode fibonacci_tree(std::size_t depth, std::size_t depth_limit) {
  if (depth > depth_limit) {
    throw RangeError("tree depth " + std::to_string(depth) + " exceeds the limit " + std::to_string(depth_limit));
  }
  return grow(DigitBlock(), depth);
}

std::vector<BlockSolution> tree_level(std::size_t m) {
  std::vector<BlockSolution> out;
  for (const auto& w : all_blocks(m)) out.push_back(solve_block(w));
  return out;
}

OccurrenceSet solve_positional(const DigitBlock& w, std::size_t k) {
  require_non_empty(w);
  const std::size_t m = w.length();
  const auto lead = static_cast<std::size_t>(w.leading());
  const std::size_t branch_count_index = k + 2 - static_cast<std::size_t>(w.trailing());
  const Integer branch_count = fib(branch_count_index);
  const Integer base = gamma_offset(w.append_zeros(k));
  const Integer p = fib(k + m + lead);
  const Integer q = fib(k + m - 1 + lead);
  std::vector<GBS> branches;
  for (Integer j = 0; j < branch_count; ++j) branches.push_back(GBS{p, q, base + j});
  return OccurrenceSet(std::move(branches));
}

DensityValue density(const DigitBlock& w, std::size_t k) {
  require_non_empty(w);
  const std::size_t index = k + 2 - static_cast<std::size_t>(w.trailing());
  const auto exponent = -static_cast<std::int64_t>(k + w.length() + static_cast<std::size_t>(w.leading()));
  Integer coefficient = fib(index);
  GoldenNumber value = coefficient * phi_pow(exponent);
  return {std::move(value), std::move(coefficient), index, exponent};
}

GoldenNumber density_total(std::size_t m, std::size_t k) {
  GoldenNumber total;
  for (const auto& w : all_blocks(m)) total += density(w, k).value;
  return total;
}

}  // namespace zeck
