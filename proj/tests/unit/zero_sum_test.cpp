#include <gtest/gtest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "fixtures.hpp"
#include "tourney/error.hpp"
#include "tourney/search.hpp"
#include "tourney/zero_sum.hpp"

namespace tourney {
namespace {

using testing::three_cycle;

TEST(Fraction, RoundTrip) {
  EXPECT_EQ(to_fraction_string(Rational(1, 9)), "1/9");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
  EXPECT_EQ(to_fraction_string(Rational(1)), "1/1");
  EXPECT_EQ(to_fraction_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(parse_fraction("3/9"), Rational(1, 3));
  EXPECT_THROW(parse_fraction("abc"), std::invalid_argument);
}

TEST(Lottery, Validation) {
  EXPECT_NO_THROW(Lottery({Rational(1, 2), Rational(1, 2)}));
  EXPECT_THROW(Lottery({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(Lottery({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
  const Lottery p({Rational(0), Rational(1)});
  EXPECT_EQ(p.support(), ChoiceSet::of(2, {1}));
}

TEST(SolveZeroSum, RockPaperScissors) {
  const Lottery p = solve_symmetric_zero_sum(three_cycle().skew_adjacency());
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(p[x], Rational(1, 3));
}

TEST(SolveZeroSum, CondorcetWinnerTakesAll) {
  const Lottery p = solve_symmetric_zero_sum(Tournament::transitive_chain(5).skew_adjacency());
  EXPECT_EQ(p[0], Rational(1));
  for (std::size_t x = 1; x < 5; ++x) EXPECT_EQ(p[x], Rational(0));
}

TEST(SolveZeroSum, SingleAlternative) {
  const Lottery p = solve_symmetric_zero_sum(Tournament::transitive_chain(1).skew_adjacency());
  EXPECT_EQ(p[0], Rational(1));
}

TEST(SolveZeroSum, RejectsNonSkewMatrix) {
  RationalMatrix m(2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  EXPECT_FALSE(m.is_skew_symmetric());
  EXPECT_THROW(solve_symmetric_zero_sum(m), InvalidTournament);
}

TEST(SolveZeroSum, GeneralSkewMatrix) {
  // Weighted rock-paper-scissors; the optimum is (1/6, 1/2, 1/3).
  RationalMatrix m(3);
  m.at(0, 1) = 2;
  m.at(1, 0) = -2;
  m.at(1, 2) = 1;
  m.at(2, 1) = -1;
  m.at(2, 0) = 3;
  m.at(0, 2) = -3;
  const Lottery p = solve_symmetric_zero_sum(m);
  for (std::size_t y = 0; y < 3; ++y) {
    Rational payoff = 0;
    for (std::size_t x = 0; x < 3; ++x) payoff += p[x] * m.at(x, y);
    EXPECT_GE(payoff, 0);
  }
  EXPECT_EQ(p[0], Rational(1, 6));
  EXPECT_EQ(p[1], Rational(1, 2));
  EXPECT_EQ(p[2], Rational(1, 3));
}

TEST(VerifyEquilibrium, AcceptsAndRejects) {
  const SkewAdjacency m = three_cycle().skew_adjacency();
  const std::vector<Rational> uniform(3, Rational(1, 3));
  EXPECT_TRUE(verify_equilibrium(m, uniform));
  const std::vector<Rational> pure{Rational(1), Rational(0), Rational(0)};
  EXPECT_FALSE(verify_equilibrium(m, pure));
  const std::vector<Rational> unnormalized(3, Rational(1, 2));
  EXPECT_FALSE(verify_equilibrium(m, unnormalized));
  EXPECT_THROW(verify_equilibrium(m, std::vector<Rational>(2, Rational(1, 2))), InvalidTournament);
  EXPECT_THROW(equilibrium_slack(m, std::vector<Rational>(4)), InvalidTournament);
}

// Exact solver against odd-support enumeration; checks feasibility,
// complementary slackness, odd support and uniqueness.
TEST(SolveZeroSum, MatchesSupportEnumeration) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + gen() % 9;
    const Tournament t = random_tournament(n, gen());
    const SkewAdjacency m = t.skew_adjacency();
    const Lottery p = solve_symmetric_zero_sum(m);
    ASSERT_TRUE(verify_equilibrium(m, p));
    const auto slack = equilibrium_slack(m, p.weights());
    for (std::size_t y = 0; y < n; ++y) {
      if (sgn(p[y]) > 0) {
        EXPECT_EQ(slack[y], 0);
      }
    }
    EXPECT_EQ(p.support().size() % 2, 1u);

    const oracle::SupportSolution ref = oracle::bipartisan(t);
    EXPECT_EQ(ref.feasible_supports, 1u);
    EXPECT_EQ(p.support().mask(), ref.support);
    for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(p[x], ref.weights[x]);
  }
}

}  // namespace
}  // namespace tourney
