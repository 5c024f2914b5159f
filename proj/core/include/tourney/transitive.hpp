#pragma once

#include <cstddef>
#include <vector>

#include "tourney/choice_set.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// True iff the restriction of T to `subset` has no 3-cycle.
bool is_transitive_subset(const Tournament& t, const ChoiceSet& subset);

/// Given a transitive `chain`, whether chain + {b} is still transitive.
///
/// In a linear order every member above b must beat every member below b,
/// so it suffices to check that the chain members beating b jointly beat
/// the chain members b beats.
bool extends_transitively(const Tournament& t, Mask chain, Alternative b);

/// All inclusion-maximal transitive subsets of the restriction of T to
/// `within`, as subsets of T's carrier. Output is ordered by the ascending
/// member list. Throws CapExceeded if |within| > cap, InvalidTournament if
/// `within` is empty.
std::vector<ChoiceSet> maximal_transitive_subsets(
    const Tournament& t, const ChoiceSet& within,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace tourney
