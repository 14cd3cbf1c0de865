#include <gtest/gtest.h>

#include "support/reference.hpp"
#include "zeck/error.hpp"
#include "zeck/solver.hpp"
#include "zeck/wythoff.hpp"

namespace zeck {
namespace {

std::vector<std::string> words_up_to(std::size_t len) {
  std::vector<std::string> all, level{""};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<std::string> next;
    for (const auto& u : level) {
      next.push_back(u + 'A');
      next.push_back(u + 'B');
    }
    level = next;
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

TEST(WythoffWord, ParseAndPrint) {
  EXPECT_EQ(WythoffWord::parse("BBA"), WythoffWord("BBA"));
  EXPECT_EQ(WythoffWord::parse("A^3-1"), WythoffWord("AAA", -1));
  EXPECT_EQ(WythoffWord::parse("AB^2A+4"), WythoffWord("ABBA", 4));
  EXPECT_EQ(WythoffWord::parse("Id-1"), WythoffWord("", -1));
  EXPECT_EQ(WythoffWord::parse("AA\xE2\x88\x92" "1"), WythoffWord("AA", -1));
  EXPECT_EQ(to_string(WythoffWord("AAA", -1)), "AAA-1");
  EXPECT_EQ(to_string(WythoffWord("AAA", -1), WordNotation::compact), "A^3-1");
  EXPECT_EQ(to_string(WythoffWord("ABBA"), WordNotation::compact), "AB^2A");
  EXPECT_EQ(to_string(WythoffWord("", 2)), "Id+2");
  EXPECT_THROW(WythoffWord::parse("AC"), InvalidWord);
  EXPECT_THROW(WythoffWord::parse(""), InvalidWord);
  EXPECT_THROW(WythoffWord::parse("A^"), InvalidWord);
  EXPECT_THROW(WythoffWord::parse("A-1x"), InvalidWord);
  EXPECT_THROW(WythoffWord("AXB"), InvalidWord);
}

TEST(WythoffWord, RoundTripThroughText) {
  for (const auto& letters : words_up_to(6)) {
    for (int shift : {-3, 0, 2}) {
      const WythoffWord u(letters, shift);
      ASSERT_EQ(WythoffWord::parse(to_string(u)), u);
      ASSERT_EQ(WythoffWord::parse(to_string(u, WordNotation::compact)), u);
    }
  }
}

TEST(DirectEval, Examples) {
  EXPECT_EQ(direct_eval(WythoffWord("AB"), 1), 3);
  EXPECT_EQ(direct_eval(WythoffWord("A"), 4), 6);
  for (int n = 1; n < 20; ++n) EXPECT_EQ(direct_eval(WythoffWord("", -1), n), n - 1);
  // shifts stay outside the letters
  EXPECT_EQ(direct_eval(WythoffWord("A", -1).then('B'), 2), wythoff_A(wythoff_B(2)) - 1);
}

TEST(CshReduce, TreeNodes) {
  EXPECT_EQ(csh_reduce(WythoffWord("BA")), (GBS{2, 1, -1}));
  EXPECT_EQ(csh_reduce(WythoffWord("AA")), (GBS{1, 1, -1}));
  EXPECT_EQ(csh_reduce(WythoffWord("AAB")), (GBS{3, 2, -1}));
  EXPECT_EQ(csh_reduce(WythoffWord("ABA")), (GBS{3, 2, -2}));
  EXPECT_EQ(csh_reduce(WythoffWord("AAA", -1)), (GBS{2, 1, -3}));
  EXPECT_THROW(csh_reduce(WythoffWord("")), RangeError);
}

TEST(CshReduce, SoundForAllShortWords) {
  const auto words = words_up_to(8);
  ASSERT_EQ(words.size(), 510u);
  for (const auto& letters : words) {
    const WythoffWord u(letters);
    const GBS g = csh_reduce(u);
    const std::size_t s = u.count_A() + 2 * u.count_B();
    ASSERT_EQ(g.p, fib(s));
    ASSERT_EQ(g.q, fib(s - 1));
    for (std::int64_t n = 1; n <= 500; ++n) {
      ASSERT_EQ(gbs_eval(g, n), ref::compose(letters, n)) << letters << " n=" << n;
    }
  }
}

TEST(CshReduce, LambdaIsConstant) {
  for (const auto& letters : words_up_to(7)) {
    const WythoffWord u(letters);
    const std::size_t s = u.count_A() + 2 * u.count_B();
    const Integer lambda = csh_lambda(u);
    for (Integer n : {Integer(2), Integer(1000), Integer(123456)}) {
      ASSERT_EQ(fib(s) * wythoff_A(n) + fib(s - 1) * n - direct_eval(u, n), lambda) << letters;
    }
  }
}

TEST(WythoffArray, Examples) {
  EXPECT_EQ(wythoff_array(1, 0), 1);
  EXPECT_EQ(wythoff_array(2, 1), 4);
  EXPECT_EQ(wythoff_array(2, 2), 7);
  // first row is 1 2 3 5 8 13 ...
  for (std::size_t m = 0; m < 20; ++m) EXPECT_EQ(wythoff_array(1, m), fib(m + 1));
}

TEST(WythoffArray, ColumnsAreBlockSequences) {
  for (int n = 1; n <= 200; ++n) ASSERT_EQ(wythoff_array(n, 0), wythoff_A(n));
  for (std::size_t m = 1; m <= 8; ++m) {
    const BlockSolution s = solve_block(DigitBlock::parse("1" + std::string(m - 1, '0')));
    for (int n = 1; n <= 200; ++n) {
      ASSERT_EQ(wythoff_array(n, m), direct_eval(s.compound, n)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(IdentityCatalog, AllHoldPointwise) {
  const auto catalog = identity_catalog(0, 5);
  EXPECT_EQ(catalog.size(), 6u + 6u * 5u + 5u * 5u);
  for (const auto& id : catalog) {
    EXPECT_FALSE(first_mismatch(id, 1000).has_value()) << id.name << " m=" << id.m;
  }
}

TEST(IdentityCatalog, SpecificInstances) {
  const auto catalog = identity_catalog(1, 1);
  auto find = [&](const std::string& prefix) {
    for (const auto& id : catalog) {
      if (id.name.rfind(prefix, 0) == 0) return id;
    }
    throw std::runtime_error("missing identity " + prefix);
  };
  const Identity odd = find("(A^{2m-1}-1)B");
  EXPECT_EQ(to_string(odd.left), "AB-1");
  EXPECT_EQ(to_string(odd.right), "BA");
  EXPECT_EQ(to_string(find("(A^m-1)A").right), "AA-1");
  // the unlisted variant C(010^{2m}) = AB^mAA fails already at m = 1
  const Identity wrong{"C(0100) = ABAA", 1, solve_block(DigitBlock::parse("0100")).gbs, WythoffWord("ABAA")};
  EXPECT_TRUE(first_mismatch(wrong, 100).has_value());
}

TEST(IdentityCatalog, CatchesBrokenIdentity) {
  const Identity broken{"A = B", 0, WythoffWord("A"), WythoffWord("B")};
  EXPECT_EQ(first_mismatch(broken, 10), Integer(1));
}

}  // namespace
}  // namespace zeck
