#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "ncdioph/word_equation.hpp"

using namespace ncd;
using namespace oracle;

namespace {

std::vector<std::string> render(const WordSystem& sys, const std::vector<WordAssignment>& sols) {
  std::vector<std::string> out;
  for (const auto& a : sols) out.push_back(format_assignment(sys, a));
  return out;
}

}  // namespace

TEST(WordSolve, CommutesWithA) {
  auto sys = parse_word_system("alphabet a b\nx1 a = a x1");
  auto sols = word_solve(sys, 3);
  EXPECT_EQ(render(sys, sols), (std::vector<std::string>{"x1 = 1", "x1 = a", "x1 = a a", "x1 = a a a"}));
}

TEST(WordSolve, SquareRoot) {
  auto sys = parse_word_system("x1 x1 = a a");
  EXPECT_EQ(render(sys, word_solve(sys, 2)), std::vector<std::string>{"x1 = a"});
}

TEST(WordSolve, NoConjugator) {
  auto sys = parse_word_system("alphabet a b\nx1 b = a x1");
  EXPECT_TRUE(word_solve(sys, 4).empty());
}

TEST(WordSolve, ZeroBound) {
  auto sys = parse_word_system("alphabet a\nx1 a = a x1");
  EXPECT_EQ(word_solve(sys, 0).size(), 1u);
  EXPECT_TRUE(word_solve(parse_word_system("x1 = a"), 0).empty());
}

TEST(WordSolve, LengthPruning) {
  auto sys = parse_word_system("alphabet a b\nx1 x1 = a b a");
  EXPECT_FALSE(length_feasible(sys, 5));
  WordSolveStats st;
  EXPECT_TRUE(word_solve(sys, 5, &st).empty());
  EXPECT_EQ(st.length_vectors, 0u);
  EXPECT_TRUE(length_feasible(parse_word_system("x1 x2 = a b a"), 2));
  EXPECT_FALSE(length_feasible(parse_word_system("x1 x2 = a b a"), 1));
}

TEST(WordSolve, ParsingAndFormatting) {
  auto sys = parse_word_system("# comment\nx1 a = 1\nx2 = b x1\n");
  EXPECT_EQ(sys.variables, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(sys.alphabet, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(sys.equations[0].rhs.empty());
  EXPECT_EQ(format_word(sys, {0, 1}), "a b");
  EXPECT_EQ(format_word(sys, {}), "1");
}

TEST(WordSolve, MatchesNaiveEnumeration) {
  gen::Rng rng(53);
  for (int n = 0; n < 120; ++n) {
    auto sys = random_system(rng);
    const auto bound = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
    auto got = word_solve(sys, bound);
    auto expected = naive(sys, bound);
    EXPECT_EQ(got, expected) << "system " << n;
    for (const auto& a : got) EXPECT_TRUE(satisfies(sys, a));
    // Pruning never discards a length vector that has solutions.
    if (!expected.empty()) EXPECT_TRUE(length_feasible(sys, bound));
  }
}
