#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zeck/digit_block.hpp"
#include "zeck/fib.hpp"
#include "zeck/solver.hpp"

namespace zeck {

// Brute-force ground truth. Everything here reads digits through encode /
// block_at and never touches the Beatty or Wythoff code paths.

/// All N in [0, bound) with w at position k, ascending.
std::vector<Integer> brute_occurrences(const DigitBlock& w, std::size_t k, const Integer& bound);

/// The first `count` such N, scanning as far as needed.
std::vector<Integer> brute_first(const DigitBlock& w, std::size_t k, std::size_t count);

/// |brute_occurrences(w, k, bound)| / bound.
Rational empirical_density(const DigitBlock& w, std::size_t k, const Integer& bound);

struct Counterexample {
  std::string word;
  std::size_t k = 0;
  Integer n;
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// First failing check, in report order.
  const CheckResult* first_failure() const;
};

using Solver = std::function<BlockSolution(const DigitBlock&)>;

struct CertifyConfig {
  std::size_t depth = 6;       // longest block length checked
  std::size_t k_max = 3;       // largest position checked
  std::size_t n_terms = 200;   // terms compared per sequence
  Integer bound = 100000;      // brute-force range for partition and densities
  std::size_t csh_length = 8;  // longest {A,B}-word for the closed-form check
  std::size_t identity_m_max = 5;
  Integer identity_n = 1000;
  bool parallel = true;        // one task per check family
  Solver solver = solve_block; // replaceable for fault injection
};

/// Runs every check family and returns results sorted by name, then parameters.
VerificationReport certify(const CertifyConfig& config = {});

}  // namespace zeck
