#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}
  explicit RationalMatrix(const SkewAdjacency& m);

  std::size_t order() const noexcept { return order_; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * order_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }

  bool is_skew_symmetric() const;

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

/// Optimal strategy of the symmetric zero-sum game with payoff matrix M
/// (row player receives M(x,y)): the p with p >= 0, sum p = 1 and
/// sum_x p(x) M(x,y) >= 0 for every column y.
///
/// Found by a phase-one simplex over exact rationals with Bland's rule, so
/// it always terminates. For tournaments the feasible point is unique.
/// Throws InvalidTournament if M is not skew-symmetric, SolverError if the
/// simplex reports infeasibility (impossible for valid input).
Lottery solve_symmetric_zero_sum(const RationalMatrix& m);
Lottery solve_symmetric_zero_sum(const SkewAdjacency& m);

/// Column payoffs sum_x p(x) M(x,y), one per y. Throws InvalidTournament on
/// a dimension mismatch.
std::vector<Rational> equilibrium_slack(const SkewAdjacency& m,
                                        std::span<const Rational> p);

/// True iff p >= 0, sum p = 1 and every column payoff is >= 0, all exact.
/// Throws InvalidTournament on a dimension mismatch.
bool verify_equilibrium(const SkewAdjacency& m, std::span<const Rational> p);
inline bool verify_equilibrium(const SkewAdjacency& m, const Lottery& p) {
  return verify_equilibrium(m, p.weights());
}

}  // namespace tourney
