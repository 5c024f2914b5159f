#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tourney/choice_set.hpp"
#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Alternatives of maximum out-degree.
ChoiceSet copeland_set(const Tournament& t);

/// Top strongly connected component of the dominance digraph; the smallest
/// nonempty set beating everything outside it.
ChoiceSet top_cycle(const Tournament& t);

/// Alternatives not covered, where y covers x iff y beats x and the dominion
/// of x is contained in the dominion of y. Computed both by the covering
/// relation and by two-step reachability; a disagreement throws
/// std::logic_error.
ChoiceSet uncovered_set(const Tournament& t);

struct BanksMembership {
  bool member = false;
  /// Transitive subset of dominion(x) that no alternative dominates together
  /// with x, ordered from top to bottom. Set iff member.
  std::optional<std::vector<Alternative>> witness;
  /// Distinct chains expanded by the search.
  std::size_t nodes_explored = 0;
};

/// Whether x is the maximum of some inclusion-maximal transitive subset.
///
/// Depth-first search over transitive chains C inside dominion(x), tracking
/// W = alternatives that dominate all of C and x. x is a member iff some C
/// reaches W = {}. At each node the search picks the w in W with the fewest
/// insertable counters b (b beats w) and branches on those only, since any
/// completion must contain one of them. A false result means the search
/// space was exhausted. Throws std::out_of_range for x >= order.
BanksMembership banks_member(const Tournament& t, Alternative x);

/// { x : banks_member(t, x) }. Evaluates members on up to `workers` threads;
/// the result does not depend on the worker count.
ChoiceSet banks_set(const Tournament& t, unsigned workers = 1);

struct BipartisanResult {
  ChoiceSet support;
  Lottery lottery;
};

/// Support of the unique maximal lottery and the lottery itself.
BipartisanResult bipartisan_set(const Tournament& t);

}  // namespace tourney
