#include "tourney/transitive.hpp"

#include <string>

#include "tourney/error.hpp"

namespace tourney {

bool is_transitive_subset(const Tournament& t, const ChoiceSet& subset) {
  const Mask s = subset.mask();
  // x > y and y > z must imply x > z.
  bool ok = true;
  for_each_bit(s, [&](std::size_t x) {
    const Mask below_x = t.dominion_mask(x) & s;
    for_each_bit(below_x, [&](std::size_t y) {
      if ((t.dominion_mask(y) & s & ~below_x) != 0) ok = false;
    });
  });
  return ok;
}

bool extends_transitively(const Tournament& t, Mask chain, Alternative b) {
  const Mask below = t.dominion_mask(b) & chain;
  const Mask above = t.dominators_mask(b) & chain;
  Mask above_beats_all = chain;
  for_each_bit(above, [&](std::size_t c) { above_beats_all &= t.dominion_mask(c); });
  return (below & ~above_beats_all) == 0;
}

namespace {

// Grows transitive sets by adding elements in ascending index order, so each
// transitive subset of `within` is visited exactly once; a visited set is
// reported when nothing in `within` extends it.
void collect_maximal(const Tournament& t, Mask within, Mask current, std::size_t next_min,
                     std::vector<ChoiceSet>& out) {
  bool maximal = true;
  for_each_bit(within & ~current, [&](std::size_t e) {
    if (maximal && extends_transitively(t, current, e)) maximal = false;
  });
  if (maximal) {
    out.emplace_back(t.order(), current);
    return;
  }
  const Mask candidates = within & ~current & ~low_bits(next_min);
  for_each_bit(candidates, [&](std::size_t e) {
    if (extends_transitively(t, current, e)) collect_maximal(t, within, current | bit(e), e + 1, out);
  });
}

}  // namespace

std::vector<ChoiceSet> maximal_transitive_subsets(const Tournament& t, const ChoiceSet& within,
                                                  std::size_t cap) {
  if (within.empty()) throw InvalidTournament("maximal_transitive_subsets: empty domain");
  if (within.carrier_order() != t.order()) throw InvalidTournament("maximal_transitive_subsets: carrier mismatch");
  if (within.size() > cap) {
    throw CapExceeded("maximal_transitive_subsets: " + std::to_string(within.size()) +
                      " elements exceeds cap " + std::to_string(cap));
  }
  std::vector<ChoiceSet> out;
  collect_maximal(t, within.mask(), 0, 0, out);
  return out;
}

}  // namespace tourney
