#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney::paper36 {

enum class CheckStatus { kPass, kFail, kSkipped, kInfo };

const char* to_string(CheckStatus s);

/// Exact rationals appear as "num/den" strings.
using WitnessValue =
    std::variant<bool, std::int64_t, std::string, std::vector<std::int64_t>,
                 std::vector<std::string>>;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
  std::vector<std::pair<std::string, WitnessValue>> witness;

  bool passed() const noexcept { return status == CheckStatus::kPass; }
};

struct VerificationReport {
  std::size_t order = 0;
  std::vector<CheckResult> checks;

  /// True iff every check that is neither skipped nor informational passed.
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  /// Reoriented variants need not keep the rotational automorphisms.
  bool check_automorphisms = true;
  unsigned workers = 1;
};

/// Independently recomputes every claim about the order-36 construction:
///   validity        tournament axioms
///   bipartisan      support is block 0 with weight exactly 1/9 each,
///                   column payoff 0 on block 0 and 1/9 elsewhere
///   outside_profile every y outside block 0 beats 4, loses to 5 of block 0
///   banks           Banks set is the complement of block 0, with the nine
///                   block-0 refutations done by exhaustive search
///   partition       Banks and bipartisan sets are disjoint and cover A
///   degrees         scores 19 on block 0, 17 elsewhere; Copeland set is
///                   block 0; Banks members score below average
///   automorphisms   phi, psi_1..3 are automorphisms with exactly the orbits
///                   block 0 and the rest
///   center_subsets  block 0 is 4-regular with exactly 27 maximal transitive
///                   subsets, all of size 4, each beaten entirely by some
///                   alternative outside block 0
///   spoilers        the three maximal transitive families inside
///                   dominion(v0_3_3) and their dominators in triangle (2,2)
///   dominator_uniqueness  informational: number of dominators per subset
/// Failing checks are report entries, not exceptions. Throws
/// InvalidTournament unless t has order 36.
VerificationReport verify_theorem(const Tournament& t, const VerifyOptions& opts = {});

}  // namespace tourney::paper36
