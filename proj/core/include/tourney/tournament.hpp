#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourney/choice_set.hpp"

namespace tourney {

/// Index of an alternative, always < order of the tournament it addresses.
using Alternative = std::size_t;

/// Skew-adjacency matrix: +1 where row beats column, -1 the reverse, 0 on
/// the diagonal.
class SkewAdjacency {
 public:
  SkewAdjacency() = default;
  /// Row-major entries; throws InvalidTournament unless skew-symmetric with
  /// entries in {-1,0,1} and zero exactly on the diagonal.
  SkewAdjacency(std::size_t order, std::vector<std::int8_t> entries);

  std::size_t order() const noexcept { return order_; }
  int at(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * order_ + col];
  }

  friend bool operator==(const SkewAdjacency&, const SkewAdjacency&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int8_t> entries_;
};

/// Complete asymmetric dominance relation on alternatives 0..order-1.
///
/// Row x is stored as a bitmask of the alternatives x dominates, together
/// with the transposed masks, so dominion and dominators are single reads.
/// Instances are immutable once constructed.
class Tournament {
 public:
  /// Validates the tournament axioms. Throws InvalidTournament on a set
  /// diagonal bit, an asymmetry or connexity violation, or order outside
  /// [1, kMaxOrder].
  static Tournament from_dominion_masks(std::vector<Mask> dominion);
  /// rows[x][y] is true iff x beats y. Same checks, plus squareness.
  static Tournament from_matrix(const std::vector<std::vector<bool>>& rows);
  /// 0 beats 1 beats ... beats n-1, transitively.
  static Tournament transitive_chain(std::size_t order);

  std::size_t order() const noexcept { return out_.size(); }

  bool dominates(Alternative x, Alternative y) const noexcept {
    return (out_[x] & bit(y)) != 0;
  }

  /// Unchecked mask accessors used by the inner loops.
  Mask dominion_mask(Alternative x) const noexcept { return out_[x]; }
  Mask dominators_mask(Alternative x) const noexcept { return in_[x]; }
  Mask all_mask() const noexcept { return low_bits(order()); }

  /// { y : x beats y }. Throws std::out_of_range for x >= order.
  ChoiceSet dominion(Alternative x) const;
  /// { y : y beats x }. Throws std::out_of_range for x >= order.
  ChoiceSet dominators(Alternative x) const;
  /// Out-degree. Throws std::out_of_range for x >= order.
  std::size_t copeland_score(Alternative x) const;

  ChoiceSet all() const { return ChoiceSet::full(order()); }
  SkewAdjacency skew_adjacency() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.out_ == b.out_;
  }

 private:
  explicit Tournament(std::vector<Mask> dominion);
  void check_index(Alternative x) const;

  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

/// A sub-tournament together with the parent index of each of its vertices.
struct Restriction {
  Tournament tournament;
  std::vector<Alternative> parent_index;
};

/// Sub-tournament induced on `subset`, vertices renumbered in ascending
/// parent order. Throws InvalidTournament for an empty subset.
Restriction restrict(const Tournament& t, const ChoiceSet& subset);

}  // namespace tourney
