#include <gtest/gtest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "fixtures.hpp"
#include "tourney/permutation.hpp"
#include "tourney/search.hpp"
#include "tourney/solutions.hpp"
#include "tourney/transitive.hpp"

namespace tourney {
namespace {

using testing::t36;
using testing::three_cycle;

TEST(CopelandSet, Examples) {
  EXPECT_EQ(copeland_set(three_cycle()), three_cycle().all());
  EXPECT_EQ(copeland_set(Tournament::transitive_chain(4)), ChoiceSet::of(4, {0}));
  EXPECT_EQ(copeland_set(t36()), paper36::block(0));
}

TEST(TopCycle, Examples) {
  EXPECT_EQ(top_cycle(three_cycle()), three_cycle().all());
  EXPECT_EQ(top_cycle(Tournament::transitive_chain(6)), ChoiceSet::of(6, {0}));
  // Cycle on {1,2,3} above 0.
  const Tournament t = Tournament::from_matrix({{false, false, false, false},
                                                {true, false, true, false},
                                                {true, false, false, true},
                                                {true, true, false, false}});
  EXPECT_EQ(top_cycle(t), ChoiceSet::of(4, {1, 2, 3}));
  EXPECT_EQ(top_cycle(t36()), t36().all());
}

TEST(UncoveredSet, Examples) {
  EXPECT_EQ(uncovered_set(three_cycle()), three_cycle().all());
  EXPECT_EQ(uncovered_set(Tournament::transitive_chain(5)), ChoiceSet::of(5, {0}));
}

TEST(BanksMember, ThreeCycleAndChain) {
  for (std::size_t x = 0; x < 3; ++x) {
    const BanksMembership m = banks_member(three_cycle(), x);
    EXPECT_TRUE(m.member);
    ASSERT_TRUE(m.witness.has_value());
    ASSERT_EQ(m.witness->size(), 1u);
    EXPECT_EQ(m.witness->front(), (x + 1) % 3);
  }
  const Tournament chain = Tournament::transitive_chain(4);
  EXPECT_TRUE(banks_member(chain, 0).member);
  for (std::size_t x = 1; x < 4; ++x) {
    const BanksMembership m = banks_member(chain, x);
    EXPECT_FALSE(m.member);
    EXPECT_FALSE(m.witness.has_value());
  }
  EXPECT_THROW(banks_member(chain, 4), std::out_of_range);
}

TEST(BanksMember, CenterVertexIsExcludedByExhaustion) {
  const BanksMembership m = banks_member(t36(), 8);
  EXPECT_FALSE(m.member);
  EXPECT_GT(m.nodes_explored, 0u);
}

TEST(BanksMember, OuterVertexWitness) {
  // v1_1_3 heads a maximal transitive subset; the witness lists the rest.
  const BanksMembership m = banks_member(t36(), 11);
  ASSERT_TRUE(m.member);
  std::vector<Alternative> chain{11};
  chain.insert(chain.end(), m.witness->begin(), m.witness->end());
  std::vector<std::size_t> ids(chain.begin(), chain.end());
  const ChoiceSet s = ChoiceSet::of(36, ids);
  EXPECT_EQ(s.size(), chain.size());
  EXPECT_TRUE(is_transitive_subset(t36(), s));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(t36().dominates(chain[i], chain[i + 1]));
  for (std::size_t y = 0; y < 36; ++y) EXPECT_FALSE(s.subset_of(t36().dominion(y))) << y;
}

// Witness B: transitive, inside dominion(x), and nothing dominates B + x.
TEST(BanksMember, WitnessPropertyOnRandomTournaments) {
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + gen() % 14;
    const Tournament t = random_tournament(n, gen());
    for (std::size_t x = 0; x < n; ++x) {
      const BanksMembership m = banks_member(t, x);
      ASSERT_EQ(m.member, m.witness.has_value());
      if (!m.member) continue;
      std::vector<std::size_t> ids(m.witness->begin(), m.witness->end());
      const ChoiceSet b = ChoiceSet::of(n, ids);
      EXPECT_TRUE(is_transitive_subset(t, b));
      EXPECT_TRUE(b.subset_of(t.dominion(x)));
      const ChoiceSet with_x = b | ChoiceSet::of(n, {x});
      for (std::size_t y = 0; y < n; ++y) EXPECT_FALSE(with_x.subset_of(t.dominion(y)));
    }
  }
}

TEST(BanksSet, T36AndWorkerIndependence) {
  const ChoiceSet expected = ChoiceSet::range(36, 9, 36);
  EXPECT_EQ(banks_set(t36(), 1), expected);
  EXPECT_EQ(banks_set(t36(), 3), expected);
}

TEST(BipartisanSet, Examples) {
  const BipartisanResult cyc = bipartisan_set(three_cycle());
  EXPECT_EQ(cyc.support, three_cycle().all());
  const BipartisanResult chain = bipartisan_set(Tournament::transitive_chain(3));
  EXPECT_EQ(chain.support, ChoiceSet::of(3, {0}));
  const BipartisanResult big = bipartisan_set(t36());
  EXPECT_EQ(big.support, paper36::block(0));
  for (std::size_t x = 0; x < 9; ++x) EXPECT_EQ(big.lottery[x], Rational(1, 9));
}

// Nesting, nonemptiness and oracle agreement on random tournaments.
TEST(SolutionProperties, RandomTournaments) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 10;
    const Tournament t = random_tournament(n, gen());
    const ChoiceSet tc = top_cycle(t);
    const ChoiceSet uc = uncovered_set(t);
    const ChoiceSet ba = banks_set(t);
    const ChoiceSet bp = bipartisan_set(t).support;
    const ChoiceSet co = copeland_set(t);
    EXPECT_FALSE(ba.empty());
    EXPECT_TRUE(ba.subset_of(uc));
    EXPECT_TRUE(uc.subset_of(tc));
    EXPECT_TRUE(bp.subset_of(uc));
    EXPECT_TRUE(co.subset_of(uc));
    EXPECT_EQ(tc.mask(), oracle::top_cycle(t));
    EXPECT_EQ(uc.mask(), oracle::uncovered(t));
    EXPECT_EQ(ba.mask(), oracle::banks_set(t));
  }
}

// Solutions commute with relabeling.
TEST(SolutionProperties, Equivariance) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + gen() % 11;
    const Tournament t = random_tournament(n, gen());
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::shuffle(image.begin(), image.end(), gen);
    const Permutation sigma(image);
    const Tournament moved = apply_permutation(t, sigma);
    EXPECT_EQ(sigma.apply(banks_set(t)), banks_set(moved));
    EXPECT_EQ(sigma.apply(uncovered_set(t)), uncovered_set(moved));
    EXPECT_EQ(sigma.apply(top_cycle(t)), top_cycle(moved));
    const BipartisanResult a = bipartisan_set(t);
    const BipartisanResult b = bipartisan_set(moved);
    EXPECT_EQ(sigma.apply(a.support), b.support);
    for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(a.lottery[x], b.lottery[sigma(x)]);
  }
}

TEST(SolutionProperties, InvariantUnderT36Automorphisms) {
  const ChoiceSet ba = banks_set(t36());
  for (const Permutation& g : paper36::generators()) EXPECT_EQ(g.apply(ba), ba);
}

}  // namespace
}  // namespace tourney
