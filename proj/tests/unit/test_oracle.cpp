#include <gtest/gtest.h>

#include "zeck/oracle.hpp"

namespace zeck {
namespace {

DigitBlock W(const char* s) { return DigitBlock::parse(s); }

TEST(BruteOccurrences, Examples) {
  EXPECT_EQ(brute_occurrences(W("0"), 0, 12), (std::vector<Integer>{0, 2, 3, 5, 7, 8, 10, 11}));
  EXPECT_EQ(brute_occurrences(W("1"), 0, 15), (std::vector<Integer>{1, 4, 6, 9, 12, 14}));
  EXPECT_EQ(brute_occurrences(W("00"), 2, 10), (std::vector<Integer>{0, 1, 2, 8, 9}));
  EXPECT_EQ(brute_first(W("00"), 2, 6), (std::vector<Integer>{0, 1, 2, 8, 9, 10}));
}

TEST(BruteOccurrences, LastDigitClassesPartition) {
  const Integer bound = 20000;
  const auto zeros = brute_occurrences(W("0"), 0, bound);
  const auto ones = brute_occurrences(W("1"), 0, bound);
  ASSERT_EQ(Integer(zeros.size() + ones.size()), bound);
  std::vector<Integer> merged;
  std::merge(zeros.begin(), zeros.end(), ones.begin(), ones.end(), std::back_inserter(merged));
  for (std::size_t i = 0; i < merged.size(); ++i) ASSERT_EQ(merged[i], Integer(i));
}

TEST(BruteOccurrences, MatchesMergedClosedForm) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& w : all_blocks(m)) {
      for (std::size_t k = 0; k <= 3; ++k) {
        ASSERT_EQ(brute_occurrences(w, k, 5000), union_below(solve_positional(w, k), 5000)) << w.str() << " " << k;
      }
    }
  }
}

TEST(EmpiricalDensity, NearExact) {
  const Rational tol(1, 1000);
  for (const char* w : {"0", "1"}) {
    const Rational f = empirical_density(W(w), 0, 100000);
    const GoldenNumber exact = density(W(w), 0).value;
    EXPECT_EQ(golden_cmp(exact, f - tol), std::strong_ordering::greater) << w;
    EXPECT_EQ(golden_cmp(exact, f + tol), std::strong_ordering::less) << w;
  }
  EXPECT_EQ(empirical_density(W("0"), 0, 1), Rational(1));
}

TEST(Certify, DefaultConfigPasses) {
  const VerificationReport report = certify();
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.checks.size(), 400u);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.parameters;
  EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.parameters) < std::tie(b.name, b.parameters);
  }));
}

TEST(Certify, DepthZeroOnlyChecksRoot) {
  CertifyConfig cfg;
  cfg.depth = 0;
  const auto report = certify(cfg);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checks[0].parameters, "w=() k=0");
}

TEST(Certify, SerialAndParallelAgree) {
  CertifyConfig cfg;
  cfg.depth = 3;
  cfg.bound = 5000;
  cfg.parallel = false;
  const auto serial = certify(cfg);
  cfg.parallel = true;
  const auto parallel = certify(cfg);
  ASSERT_EQ(serial.checks.size(), parallel.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    EXPECT_EQ(serial.checks[i].name, parallel.checks[i].name);
    EXPECT_EQ(serial.checks[i].parameters, parallel.checks[i].parameters);
  }
}

TEST(Certify, CorruptedGammaIsReported) {
  CertifyConfig cfg;
  cfg.depth = 4;
  cfg.bound = 5000;
  cfg.solver = [](const DigitBlock& w) {
    BlockSolution s = solve_block(w);
    if (w.str() == "0101") s.gbs.r -= 1;
    return s;
  };
  const auto report = certify(cfg);
  EXPECT_FALSE(report.ok());
  bool oracle_failure_seen = false;
  for (const auto& c : report.checks) {
    if (c.name == "oracle-equivalence" && !c.passed) {
      oracle_failure_seen = true;
      EXPECT_EQ(c.parameters, "w=0101 k=0");
      ASSERT_TRUE(c.counterexample);
      EXPECT_EQ(c.counterexample->word, "0101");
      EXPECT_EQ(c.counterexample->n, 1);
      EXPECT_EQ(c.counterexample->expected, "4");
      EXPECT_EQ(c.counterexample->got, "3");
    }
  }
  EXPECT_TRUE(oracle_failure_seen);
  const CheckResult* first = report.first_failure();
  ASSERT_NE(first, nullptr);
  EXPECT_TRUE(first->counterexample.has_value());
}

}  // namespace
}  // namespace zeck
