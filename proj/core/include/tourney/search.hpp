#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/choice_set.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

/// Uniformly random labeled tournament.
///
/// Generator: std::mt19937_64 (output sequence fixed by the C++ standard)
/// seeded with `seed`. Pairs (i,j), i < j, are visited in lexicographic
/// order; each consumes one 64-bit draw and j beats i iff its top bit is 1.
/// Same (n, seed) gives the same tournament on every platform.
/// Throws std::invalid_argument for n = 0 or n > kMaxOrder.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

/// Seed of the index-th stream under a master seed: the SplitMix64
/// finalizer applied to master + (index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

inline constexpr std::size_t kLabeledEnumerationCap = 6;

/// Number of labeled tournaments of order n: 2^(n(n-1)/2).
std::uint64_t labeled_count(std::size_t n);

/// The code-th labeled tournament of order n. Pair p (lexicographic
/// order of (i,j), i < j) is oriented j beats i iff bit p of code is set,
/// so code 0 is the transitive chain 0 > 1 > ... > n-1.
Tournament labeled_tournament(std::size_t n, std::uint64_t code);

/// Streams all labeled tournaments of order n, each exactly once, in
/// increasing code order. Throws CapExceeded for n > kLabeledEnumerationCap.
class LabeledEnumerator {
 public:
  explicit LabeledEnumerator(std::size_t n);
  std::optional<Tournament> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::size_t n_;
  std::uint64_t total_;
  std::uint64_t code_ = 0;
};

// ---------------------------------------------------------------------------
// Isomorphism reduction
// ---------------------------------------------------------------------------

inline constexpr std::size_t kCanonicalCap = 9;

/// Complete isomorphism invariant: the n*n row-major '0'/'1' matrix of a
/// canonical relabeling. Candidates place vertices in order of ascending
/// Copeland score; among those the relabeling whose upper triangle, read
/// column by column, is lexicographically smallest wins (branch and bound
/// on that prefix). Throws CapExceeded for n > kCanonicalCap.
std::string canonical_form(const Tournament& t);

/// Given one representative per class of some order m, one representative
/// per class of order m+1 (every extension by a new vertex, deduplicated by
/// canonical form, ordered by canonical form).
std::vector<Tournament> extend_classes(const std::vector<Tournament>& classes);

/// One representative per isomorphism class of order n, ordered by
/// canonical form. Built by extending every class of order n-1 by a new
/// vertex in all 2^(n-1) ways. Throws CapExceeded for n > kCanonicalCap.
std::vector<Tournament> nonisomorphic_tournaments(std::size_t n);

// ---------------------------------------------------------------------------
// Separation scans
// ---------------------------------------------------------------------------

enum class RuleId { kCopeland, kTopCycle, kUncovered, kBanks, kBipartisan };

/// Accepts copeland, tc|top_cycle, uc|uncovered, banks, bp|bipartisan.
/// Throws std::invalid_argument otherwise.
RuleId parse_rule(std::string_view name);
std::string_view rule_name(RuleId r);

ChoiceSet apply_rule(const Tournament& t, RuleId r);

/// Whether the two solution concepts return disjoint sets on t.
bool check_disjoint(const Tournament& t, RuleId a, RuleId b);

enum class ScanMode { kExhaustive, kRandom };

inline constexpr std::size_t kExhaustiveScanCap = 8;

struct ScanConfig {
  ScanMode mode = ScanMode::kExhaustive;
  std::size_t min_order = 1;
  std::size_t max_order = 5;
  std::size_t sample_count = 1000;  // per order, random mode
  std::uint64_t seed = 0;
  RuleId rule_a = RuleId::kBanks;
  RuleId rule_b = RuleId::kBipartisan;
  unsigned workers = 1;
};

struct OrderScan {
  std::size_t order = 0;
  /// Labeled tournaments (or extension candidates, above the labeled cap)
  /// generated before isomorphism reduction; samples in random mode.
  std::uint64_t generated = 0;
  /// Tournaments actually solved: isomorphism classes in exhaustive mode.
  std::uint64_t examined = 0;
  std::vector<Tournament> witnesses;
};

struct ScanOutcome {
  std::vector<OrderScan> orders;
  std::size_t witness_count() const;
};

/// Exhaustive mode solves one representative per isomorphism class of each
/// order (labeled enumeration + canonical dedup up to kLabeledEnumerationCap,
/// vertex extension above). Random mode solves sample_count labeled
/// tournaments per order, sample s of order n drawn with seed
/// stream_seed(stream_seed(seed, n), s). Results are independent of
/// `workers`. Throws std::invalid_argument on a bad config and CapExceeded
/// for exhaustive max_order > kExhaustiveScanCap.
ScanOutcome scan_separation(const ScanConfig& cfg);

/// Re-checks that every witness still separates the two rules.
bool reverify_witnesses(const ScanOutcome& outcome, RuleId a, RuleId b);

}  // namespace tourney
