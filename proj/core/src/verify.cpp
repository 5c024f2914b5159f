#include "tourney/verify.hpp"

#include <string>

#include "tourney/error.hpp"
#include "tourney/paper36.hpp"
#include "tourney/solutions.hpp"
#include "tourney/transitive.hpp"
#include "tourney/zero_sum.hpp"

namespace tourney::paper36 {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
    case CheckStatus::kInfo: return "info";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::vector<std::int64_t> ids(const ChoiceSet& s) {
  std::vector<std::int64_t> out;
  for (std::size_t x : s.members()) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

CheckResult make(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail), {}};
}

const ChoiceSet kCenter = block(0);

CheckResult check_validity(const Tournament& t) {
  // Round-trip through the validating constructor.
  bool ok = true;
  std::string detail = "tournament axioms hold";
  try {
    std::vector<Mask> rows(t.order());
    for (std::size_t x = 0; x < t.order(); ++x) rows[x] = t.dominion_mask(x);
    (void)Tournament::from_dominion_masks(std::move(rows));
  } catch (const InvalidTournament& e) {
    ok = false;
    detail = e.what();
  }
  CheckResult r = make("validity", ok, detail);
  r.witness.emplace_back("order", static_cast<std::int64_t>(t.order()));
  return r;
}

CheckResult check_bipartisan(const Tournament& t, const BipartisanResult& bp) {
  const SkewAdjacency m = t.skew_adjacency();
  const std::vector<Rational> slack = equilibrium_slack(m, bp.lottery.weights());
  const Rational ninth(1, 9);
  bool ok = bp.support == kCenter && verify_equilibrium(m, bp.lottery);
  std::vector<std::string> weights;
  std::vector<std::string> slacks;
  for (std::size_t x = 0; x < t.order(); ++x) {
    const bool center = kCenter.contains(x);
    if (bp.lottery[x] != (center ? ninth : Rational(0))) ok = false;
    if (slack[x] != (center ? Rational(0) : ninth)) ok = false;
    weights.push_back(to_fraction_string(bp.lottery[x]));
    slacks.push_back(to_fraction_string(slack[x]));
  }
  CheckResult r = make("bipartisan", ok,
                       ok ? "support is block 0, weight 1/9 each, payoff 1/9 at every outside column"
                          : "bipartisan lottery differs from uniform 1/9 on block 0");
  r.witness.emplace_back("support", ids(bp.support));
  r.witness.emplace_back("weights", std::move(weights));
  r.witness.emplace_back("column_payoffs", std::move(slacks));
  return r;
}

CheckResult check_outside_profile(const Tournament& t) {
  bool ok = true;
  std::vector<std::int64_t> offenders;
  for (std::size_t y = 0; y < t.order(); ++y) {
    const std::size_t wins = (t.dominion(y) & kCenter).size();
    const std::size_t losses = (t.dominators(y) & kCenter).size();
    const bool good = kCenter.contains(y) ? (wins == 4 && losses == 4) : (wins == 4 && losses == 5);
    if (!good) {
      ok = false;
      offenders.push_back(static_cast<std::int64_t>(y));
    }
  }
  CheckResult r = make("outside_profile", ok,
                       ok ? "each outside alternative beats 4 and loses to 5 of block 0; block 0 is 4-regular"
                          : "domination counts against block 0 differ");
  r.witness.emplace_back("offenders", offenders);
  r.witness.emplace_back("dominators_of_11_in_block0", ids(t.dominators(11) & kCenter));
  return r;
}

CheckResult check_banks(const Tournament& t, const ChoiceSet& ba) {
  const ChoiceSet expected = kCenter.complement();
  bool ok = ba == expected;
  CheckResult r = make("banks", ok,
                       ok ? "Banks set is the complement of block 0; block-0 refutations exhausted"
                          : "Banks set differs from the complement of block 0");
  r.witness.emplace_back("banks_set", ids(ba));
  const BanksMembership center = banks_member(t, 8);
  r.witness.emplace_back("v0_3_3_member", center.member);
  r.witness.emplace_back("v0_3_3_nodes_explored", static_cast<std::int64_t>(center.nodes_explored));
  const BanksMembership outer = banks_member(t, 11);
  if (outer.witness) {
    std::vector<std::int64_t> chain{11};
    for (Alternative b : *outer.witness) chain.push_back(static_cast<std::int64_t>(b));
    r.witness.emplace_back("v1_1_3_maximal_chain", chain);
  }
  return r;
}

CheckResult check_partition(const Tournament& t, const ChoiceSet& ba, const ChoiceSet& bp) {
  const bool disjoint = ba.disjoint_from(bp);
  const bool cover = (ba | bp) == t.all();
  CheckResult r = make("partition", disjoint && cover,
                       std::string(disjoint ? "disjoint" : "intersecting") + ", " +
                           (cover ? "covering all alternatives" : "not covering"));
  r.witness.emplace_back("intersection", ids(ba & bp));
  r.witness.emplace_back("uncovered_by_union", ids(t.all() - (ba | bp)));
  return r;
}

CheckResult check_degrees(const Tournament& t, const ChoiceSet& ba) {
  std::vector<std::int64_t> scores;
  std::vector<std::string> deviations;
  for (std::size_t x = 0; x < t.order(); ++x) {
    const std::size_t s = t.copeland_score(x);
    scores.push_back(static_cast<std::int64_t>(s));
    if (s != (kCenter.contains(x) ? 19u : 17u)) deviations.push_back(label(x) + "=" + std::to_string(s));
  }
  const ChoiceSet cs = copeland_set(t);
  // Average score is (n-1)/2; compare 2*score < n-1 to stay in integers.
  bool below_average = true;
  for (std::size_t x : ba.members()) {
    if (2 * t.copeland_score(x) >= t.order() - 1) below_average = false;
  }
  const bool ok = deviations.empty() && cs == kCenter && below_average;
  std::string detail = "score 19 on block 0, 17 elsewhere; Banks members below average 35/2";
  if (!ok) {
    detail = std::to_string(deviations.size()) + " scores deviate";
    for (std::size_t i = 0; i < deviations.size() && i < 4; ++i) detail += (i ? ", " : " (") + deviations[i];
    if (!deviations.empty()) detail += deviations.size() > 4 ? ", ...)" : ")";
    detail += cs == kCenter ? "; copeland set is block 0" : "; copeland set is not block 0";
    detail += below_average ? "; Banks members below average" : "; some Banks member at or above average";
  }
  CheckResult r = make("degrees", ok, detail);
  r.witness.emplace_back("scores", scores);
  r.witness.emplace_back("score_deviations", deviations);
  r.witness.emplace_back("copeland_set", ids(cs));
  r.witness.emplace_back("banks_below_average", below_average);
  return r;
}

CheckResult check_automorphisms(const Tournament& t) {
  const std::vector<Permutation> gens = generators();
  const char* names[] = {"phi", "psi_1", "psi_2", "psi_3"};
  bool all_auto = true;
  CheckResult r = make("automorphisms", false, "");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const bool a = is_automorphism(t, gens[k]);
    const bool fixes_center = gens[k].apply(kCenter) == kCenter;
    r.witness.emplace_back(std::string(names[k]) + "_is_automorphism", a);
    all_auto = all_auto && a && fixes_center;
  }
  if (!all_auto) {
    r.detail = "a generator is not an automorphism";
    return r;
  }
  const std::vector<ChoiceSet> orb = orbits(t, gens);
  const bool two = orb.size() == 2 && orb[0] == kCenter && orb[1] == kCenter.complement();
  r.status = two ? CheckStatus::kPass : CheckStatus::kFail;
  r.detail = two ? "four automorphisms; orbits are block 0 and its complement"
                 : std::to_string(orb.size()) + " orbits";
  r.witness.emplace_back("orbit_count", static_cast<std::int64_t>(orb.size()));
  return r;
}

struct CenterSubsets {
  CheckResult check;
  CheckResult uniqueness;
};

CenterSubsets check_center_subsets(const Tournament& t) {
  const Restriction sub = restrict(t, kCenter);
  bool regular = true;
  for (std::size_t x = 0; x < sub.tournament.order(); ++x) {
    if (sub.tournament.copeland_score(x) != 4) regular = false;
  }
  const std::vector<ChoiceSet> maximal = maximal_transitive_subsets(t, kCenter);
  bool sizes = maximal.size() == 27;
  bool dominated = true;
  std::vector<std::int64_t> dominator_counts;
  bool unique = true;
  for (const ChoiceSet& s : maximal) {
    if (s.size() != 4) sizes = false;
    Mask common = t.all_mask() & ~kCenter.mask();
    for_each_bit(s.mask(), [&](std::size_t x) { common &= t.dominators_mask(x); });
    const int c = std::popcount(common);
    dominator_counts.push_back(c);
    if (c == 0) dominated = false;
    if (c != 1) unique = false;
  }
  CheckResult r = make("center_subsets", regular && sizes && dominated,
                       std::string(regular ? "block 0 is 4-regular" : "block 0 is not 4-regular") + "; " +
                           std::to_string(maximal.size()) + " maximal transitive subsets" +
                           (dominated ? ", each beaten by an outside alternative" : ", some undominated"));
  r.witness.emplace_back("regular", regular);
  r.witness.emplace_back("maximal_transitive_count", static_cast<std::int64_t>(maximal.size()));
  r.witness.emplace_back("outside_dominator_counts", dominator_counts);

  CheckResult u{"dominator_uniqueness", CheckStatus::kInfo,
                unique ? "each maximal transitive subset of block 0 has exactly one outside dominator"
                       : "some maximal transitive subset of block 0 has zero or several outside dominators",
                {}};
  u.witness.emplace_back("unique", unique);
  return {std::move(r), std::move(u)};
}

CheckResult check_spoilers(const Tournament& t) {
  const Alternative center = 8;  // v0_3_3
  const Mask d01 = triangle(0, 1).mask();
  const Mask d3[] = {triangle(3, 1).mask(), triangle(3, 2).mask(), triangle(3, 3).mask()};
  const Mask v01[] = {bit(0), bit(1), bit(2)};
  // Family k is beaten entirely by v2_2_{k+1}.
  const Mask families[] = {
      v01[1] | v01[2] | d3[0] | d3[1],
      v01[0] | v01[2] | d3[1] | d3[2],
      v01[0] | v01[1] | d3[0] | d3[2],
  };
  const Alternative spoilers[] = {21, 22, 23};
  bool ok = true;

  // Each spoiler beats v0_3_3 and the part of its dominion outside Delta^0_1 and Delta^3.
  const Mask rest = bit(6) | bit(11) | bit(14) | bit(17) | triangle(2, 3).mask();
  for (Alternative s : spoilers) {
    if ((rest & ~t.dominion_mask(s)) != 0 || !t.dominates(s, center)) ok = false;
  }
  std::vector<std::int64_t> family_dominated;
  for (int k = 0; k < 3; ++k) {
    const bool d = (families[k] & ~t.dominion_mask(spoilers[k])) == 0;
    family_dominated.push_back(d ? 1 : 0);
    if (!d) ok = false;
  }
  const ChoiceSet space(t.order(), d01 | d3[0] | d3[1] | d3[2]);
  const std::vector<ChoiceSet> maximal = maximal_transitive_subsets(t, space);
  std::int64_t outside = 0;
  for (const ChoiceSet& s : maximal) {
    bool inside = false;
    for (Mask f : families) inside = inside || (s.mask() & ~f) == 0;
    if (!inside) ++outside;
  }
  ok = ok && outside == 0;
  CheckResult r = make("spoilers", ok,
                       ok ? "every maximal transitive subset of Delta^0_1 + Delta^3 lies in a family "
                            "beaten by v2_2_1, v2_2_2 or v2_2_3"
                          : "spoiler structure differs");
  r.witness.emplace_back("family_dominated", family_dominated);
  r.witness.emplace_back("maximal_transitive_count", static_cast<std::int64_t>(maximal.size()));
  r.witness.emplace_back("outside_families", outside);
  return r;
}

}  // namespace

VerificationReport verify_theorem(const Tournament& t, const VerifyOptions& opts) {
  if (t.order() != kOrder) {
    throw InvalidTournament("verify_theorem: expected order 36, got " + std::to_string(t.order()));
  }
  VerificationReport report;
  report.order = t.order();

  const BipartisanResult bp = bipartisan_set(t);
  const ChoiceSet ba = banks_set(t, opts.workers);

  report.checks.push_back(check_validity(t));
  report.checks.push_back(check_bipartisan(t, bp));
  report.checks.push_back(check_outside_profile(t));
  report.checks.push_back(check_banks(t, ba));
  report.checks.push_back(check_partition(t, ba, bp.support));
  report.checks.push_back(check_degrees(t, ba));
  if (opts.check_automorphisms) {
    report.checks.push_back(check_automorphisms(t));
  } else {
    report.checks.push_back(CheckResult{"automorphisms", CheckStatus::kSkipped,
                                        "skipped for reoriented variants", {}});
  }
  CenterSubsets cs = check_center_subsets(t);
  report.checks.push_back(std::move(cs.check));
  report.checks.push_back(check_spoilers(t));
  report.checks.push_back(std::move(cs.uniqueness));
  return report;
}

}  // namespace tourney::paper36
