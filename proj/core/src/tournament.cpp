#include "tourney/tournament.hpp"

#include <stdexcept>
#include <string>

#include "tourney/error.hpp"

namespace tourney {

namespace {

std::string pair_str(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

SkewAdjacency::SkewAdjacency(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw InvalidTournament("SkewAdjacency: expected " + std::to_string(order_ * order_) +
                            " entries");
  }
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      int v = at(x, y);
      if (v < -1 || v > 1) throw InvalidTournament("SkewAdjacency: entry outside {-1,0,1}");
      if (v + at(y, x) != 0) throw InvalidTournament("SkewAdjacency: not skew-symmetric at " + pair_str(x, y));
      if ((v == 0) != (x == y)) throw InvalidTournament("SkewAdjacency: zero off the diagonal at " + pair_str(x, y));
    }
  }
}

Tournament::Tournament(std::vector<Mask> dominion) : out_(std::move(dominion)), in_(out_.size(), 0) {
  for (std::size_t x = 0; x < out_.size(); ++x) {
    for_each_bit(out_[x], [&](std::size_t y) { in_[y] |= bit(x); });
  }
}

Tournament Tournament::from_dominion_masks(std::vector<Mask> dominion) {
  const std::size_t n = dominion.size();
  if (n == 0) throw InvalidTournament("tournament must have at least one alternative");
  if (n > kMaxOrder) throw InvalidTournament("tournament order exceeds 64");
  const Mask all = low_bits(n);
  for (std::size_t x = 0; x < n; ++x) {
    if ((dominion[x] & ~all) != 0) throw InvalidTournament("row " + std::to_string(x) + " has bits beyond the order");
    if ((dominion[x] & bit(x)) != 0) throw InvalidTournament("diagonal entry " + pair_str(x, x) + " is set");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool xy = (dominion[x] & bit(y)) != 0;
      const bool yx = (dominion[y] & bit(x)) != 0;
      if (xy && yx) throw InvalidTournament("asymmetry violated at " + pair_str(x, y));
      if (!xy && !yx) throw InvalidTournament("connexity violated at " + pair_str(x, y));
    }
  }
  return Tournament(std::move(dominion));
}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& rows) {
  const std::size_t n = rows.size();
  if (n > kMaxOrder) throw InvalidTournament("tournament order exceeds 64");
  std::vector<Mask> dominion(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) throw InvalidTournament("matrix is not square");
    for (std::size_t y = 0; y < n; ++y) {
      if (rows[x][y]) dominion[x] |= bit(y);
    }
  }
  return from_dominion_masks(std::move(dominion));
}

Tournament Tournament::transitive_chain(std::size_t order) {
  if (order == 0 || order > kMaxOrder) throw InvalidTournament("chain order outside [1, 64]");
  std::vector<Mask> dominion(order);
  for (std::size_t x = 0; x < order; ++x) dominion[x] = low_bits(order) & ~low_bits(x + 1);
  return Tournament(std::move(dominion));
}

void Tournament::check_index(Alternative x) const {
  if (x >= order()) {
    throw std::out_of_range("alternative " + std::to_string(x) + " out of range for order " +
                            std::to_string(order()));
  }
}

ChoiceSet Tournament::dominion(Alternative x) const {
  check_index(x);
  return ChoiceSet(order(), out_[x]);
}

ChoiceSet Tournament::dominators(Alternative x) const {
  check_index(x);
  return ChoiceSet(order(), in_[x]);
}

std::size_t Tournament::copeland_score(Alternative x) const {
  check_index(x);
  return static_cast<std::size_t>(std::popcount(out_[x]));
}

SkewAdjacency Tournament::skew_adjacency() const {
  const std::size_t n = order();
  std::vector<std::int8_t> entries(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) entries[x * n + y] = dominates(x, y) ? 1 : -1;
    }
  }
  return SkewAdjacency(n, std::move(entries));
}

Restriction restrict(const Tournament& t, const ChoiceSet& subset) {
  if (subset.empty()) throw InvalidTournament("restrict: empty subset");
  if (subset.carrier_order() != t.order()) throw InvalidTournament("restrict: carrier mismatch");
  std::vector<Alternative> parent = subset.members();
  std::vector<Mask> dominion(parent.size(), 0);
  for (std::size_t a = 0; a < parent.size(); ++a) {
    for (std::size_t b = 0; b < parent.size(); ++b) {
      if (t.dominates(parent[a], parent[b])) dominion[a] |= bit(b);
    }
  }
  return Restriction{Tournament::from_dominion_masks(std::move(dominion)), std::move(parent)};
}

}  // namespace tourney
