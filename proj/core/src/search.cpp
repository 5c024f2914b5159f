#include "tourney/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "tourney/error.hpp"
#include "tourney/solutions.hpp"

namespace tourney {

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("random_tournament: order outside [1, 64]");
  std::mt19937_64 gen(seed);
  std::vector<Mask> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((gen() >> 63) != 0) {
        rows[j] |= bit(i);
      } else {
        rows[i] |= bit(j);
      }
    }
  }
  return Tournament::from_dominion_masks(std::move(rows));
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t labeled_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs >= 64) throw CapExceeded("labeled_count: overflows 64 bits");
  return std::uint64_t{1} << pairs;
}

Tournament labeled_tournament(std::size_t n, std::uint64_t code) {
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("labeled_tournament: order outside [1, 64]");
  std::vector<Mask> rows(n, 0);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      if (p < 64 && ((code >> p) & 1u) != 0) {
        rows[j] |= bit(i);
      } else {
        rows[i] |= bit(j);
      }
    }
  }
  return Tournament::from_dominion_masks(std::move(rows));
}

LabeledEnumerator::LabeledEnumerator(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("LabeledEnumerator: order must be positive");
  if (n > kLabeledEnumerationCap) {
    throw CapExceeded("LabeledEnumerator: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kLabeledEnumerationCap));
  }
  total_ = labeled_count(n);
}

std::optional<Tournament> LabeledEnumerator::next() {
  if (code_ >= total_) return std::nullopt;
  return labeled_tournament(n_, code_++);
}

RuleId parse_rule(std::string_view name) {
  if (name == "copeland") return RuleId::kCopeland;
  if (name == "tc" || name == "top_cycle") return RuleId::kTopCycle;
  if (name == "uc" || name == "uncovered") return RuleId::kUncovered;
  if (name == "banks") return RuleId::kBanks;
  if (name == "bp" || name == "bipartisan") return RuleId::kBipartisan;
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

std::string_view rule_name(RuleId r) {
  switch (r) {
    case RuleId::kCopeland: return "copeland";
    case RuleId::kTopCycle: return "tc";
    case RuleId::kUncovered: return "uc";
    case RuleId::kBanks: return "banks";
    case RuleId::kBipartisan: return "bp";
  }
  return "?";
}

ChoiceSet apply_rule(const Tournament& t, RuleId r) {
  switch (r) {
    case RuleId::kCopeland: return copeland_set(t);
    case RuleId::kTopCycle: return top_cycle(t);
    case RuleId::kUncovered: return uncovered_set(t);
    case RuleId::kBanks: return banks_set(t);
    case RuleId::kBipartisan: return bipartisan_set(t).support;
  }
  throw std::invalid_argument("unknown rule id");
}

bool check_disjoint(const Tournament& t, RuleId a, RuleId b) {
  return apply_rule(t, a).disjoint_from(apply_rule(t, b));
}

std::size_t ScanOutcome::witness_count() const {
  std::size_t c = 0;
  for (const OrderScan& o : orders) c += o.witnesses.size();
  return c;
}

namespace {

// flags[i] = pred(i) for i in [0, count), strided over `workers` threads.
std::vector<char> parallel_flags(std::size_t count, unsigned workers,
                                 const std::function<bool(std::size_t)>& pred) {
  std::vector<char> flags(count, 0);
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (w == 1) {
    for (std::size_t i = 0; i < count; ++i) flags[i] = pred(i);
    return flags;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < w; ++k) {
    pool.emplace_back([&, k] {
      for (std::size_t i = k; i < count; i += w) flags[i] = pred(i);
    });
  }
  return flags;
}

std::vector<Tournament> classes_by_enumeration(std::size_t n) {
  std::map<std::string, Tournament> classes;
  LabeledEnumerator it(n);
  while (auto t = it.next()) classes.try_emplace(canonical_form(*t), std::move(*t));
  std::vector<Tournament> out;
  for (auto& [form, rep] : classes) out.push_back(std::move(rep));
  return out;
}

void validate(const ScanConfig& cfg) {
  if (cfg.min_order == 0 || cfg.min_order > cfg.max_order) {
    throw std::invalid_argument("scan: need 1 <= min_order <= max_order");
  }
  if (cfg.mode == ScanMode::kExhaustive && cfg.max_order > kExhaustiveScanCap) {
    throw CapExceeded("scan: exhaustive mode supports max_order <= " + std::to_string(kExhaustiveScanCap));
  }
  if (cfg.mode == ScanMode::kRandom) {
    if (cfg.sample_count == 0) throw std::invalid_argument("scan: random mode needs sample_count > 0");
    if (cfg.max_order > kMaxOrder) throw std::invalid_argument("scan: max_order exceeds 64");
  }
}

}  // namespace

ScanOutcome scan_separation(const ScanConfig& cfg) {
  validate(cfg);
  ScanOutcome outcome;
  std::vector<Tournament> prev;  // classes of order n-1, exhaustive mode
  for (std::size_t n = cfg.min_order; n <= cfg.max_order; ++n) {
    OrderScan scan;
    scan.order = n;
    std::vector<Tournament> pool;
    if (cfg.mode == ScanMode::kExhaustive) {
      if (n <= kLabeledEnumerationCap) {
        pool = classes_by_enumeration(n);
        scan.generated = labeled_count(n);
      } else {
        if (prev.empty()) prev = nonisomorphic_tournaments(n - 1);
        scan.generated = prev.size() * (std::uint64_t{1} << (n - 1));
        pool = extend_classes(prev);
      }
    } else {
      const std::uint64_t order_seed = stream_seed(cfg.seed, n);
      pool.reserve(cfg.sample_count);
      for (std::size_t s = 0; s < cfg.sample_count; ++s) {
        pool.push_back(random_tournament(n, stream_seed(order_seed, s)));
      }
      scan.generated = cfg.sample_count;
    }
    scan.examined = pool.size();
    const std::vector<char> hits = parallel_flags(pool.size(), cfg.workers, [&](std::size_t i) {
      return check_disjoint(pool[i], cfg.rule_a, cfg.rule_b);
    });
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (hits[i]) scan.witnesses.push_back(pool[i]);
    }
    if (cfg.mode == ScanMode::kExhaustive) prev = std::move(pool);
    outcome.orders.push_back(std::move(scan));
  }
  return outcome;
}

bool reverify_witnesses(const ScanOutcome& outcome, RuleId a, RuleId b) {
  for (const OrderScan& o : outcome.orders) {
    for (const Tournament& w : o.witnesses) {
      if (w.order() != o.order || !check_disjoint(w, a, b)) return false;
    }
  }
  return true;
}

}  // namespace tourney
