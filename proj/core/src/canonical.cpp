#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "tourney/error.hpp"
#include "tourney/search.hpp"

namespace tourney {

namespace {

// Branch and bound over relabelings that list vertices by ascending score.
// Placing vertex v at position t appends the chunk (v_0 > v, ..., v_{t-1} > v)
// to the key; chunks are compared as integers with v_0 most significant.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Tournament& t) : t_(t), n_(t.order()) {
    for (std::size_t v = 0; v < n_; ++v) score_[v] = t.copeland_score(v);
    std::array<std::size_t, kCanonicalCap> sorted{};
    std::copy(score_.begin(), score_.begin() + n_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n_);
    slot_score_ = sorted;
  }

  std::string run() {
    place(0, 0);
    std::string out(n_ * n_, '0');
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (t_.dominates(best_perm_[r], best_perm_[c])) out[r * n_ + c] = '1';
      }
    }
    return out;
  }

 private:
  // Sign of the lexicographic comparison of the first len chunks.
  int compare_prefix(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (key_[i] != best_key_[i]) return key_[i] < best_key_[i] ? -1 : 1;
    }
    return 0;
  }

  void place(std::size_t pos, Mask used) {
    if (pos == n_) {
      if (!have_best_ || compare_prefix(n_) < 0) {
        have_best_ = true;
        best_key_ = key_;
        best_perm_ = perm_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used & bit(v)) != 0 || score_[v] != slot_score_[pos]) continue;
      unsigned chunk = 0;
      for (std::size_t r = 0; r < pos; ++r) chunk = (chunk << 1) | (t_.dominates(perm_[r], v) ? 1u : 0u);
      key_[pos] = chunk;
      if (have_best_ && compare_prefix(pos + 1) > 0) continue;
      perm_[pos] = v;
      place(pos + 1, used | bit(v));
    }
  }

  const Tournament& t_;
  std::size_t n_;
  std::array<std::size_t, kCanonicalCap> score_{};
  std::array<std::size_t, kCanonicalCap> slot_score_{};
  std::array<unsigned, kCanonicalCap> key_{};
  std::array<std::size_t, kCanonicalCap> perm_{};
  std::array<unsigned, kCanonicalCap> best_key_{};
  std::array<std::size_t, kCanonicalCap> best_perm_{};
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(const Tournament& t) {
  if (t.order() > kCanonicalCap) {
    throw CapExceeded("canonical_form: order " + std::to_string(t.order()) + " exceeds cap " +
                      std::to_string(kCanonicalCap));
  }
  return CanonicalSearch(t).run();
}

std::vector<Tournament> extend_classes(const std::vector<Tournament>& classes) {
  if (classes.empty()) return {};
  const std::size_t old = classes.front().order();
  if (old + 1 > kCanonicalCap) throw CapExceeded("extend_classes: order exceeds cap");
  std::map<std::string, Tournament> found;
  for (const Tournament& base : classes) {
    if (base.order() != old) throw std::invalid_argument("extend_classes: mixed orders");
    for (Mask wins = 0; wins < bit(old); ++wins) {
      std::vector<Mask> rows(old + 1, 0);
      for (std::size_t x = 0; x < old; ++x) {
        rows[x] = base.dominion_mask(x);
        if ((wins & bit(x)) == 0) rows[x] |= bit(old);
      }
      rows[old] = wins;
      Tournament ext = Tournament::from_dominion_masks(std::move(rows));
      found.try_emplace(canonical_form(ext), std::move(ext));
    }
  }
  std::vector<Tournament> out;
  out.reserve(found.size());
  for (auto& [form, rep] : found) out.push_back(std::move(rep));
  return out;
}

std::vector<Tournament> nonisomorphic_tournaments(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nonisomorphic_tournaments: order must be positive");
  if (n > kCanonicalCap) throw CapExceeded("nonisomorphic_tournaments: order exceeds cap");
  std::vector<Tournament> reps{Tournament::transitive_chain(1)};
  for (std::size_t order = 2; order <= n; ++order) reps = extend_classes(reps);
  return reps;
}

}  // namespace tourney
