#include "tourney/solutions.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "tourney/transitive.hpp"
#include "tourney/zero_sum.hpp"

namespace tourney {

ChoiceSet copeland_set(const Tournament& t) {
  std::size_t best = 0;
  Mask winners = 0;
  for (std::size_t x = 0; x < t.order(); ++x) {
    const std::size_t s = t.copeland_score(x);
    if (s > best || winners == 0) {
      best = s;
      winners = bit(x);
    } else if (s == best) {
      winners |= bit(x);
    }
  }
  return ChoiceSet(t.order(), winners);
}

namespace {

// Tarjan over the dominance digraph; returns the component id of each
// vertex. Components are numbered in the order they complete, so sinks of
// the condensation come first.
struct Scc {
  const Tournament& t;
  std::vector<int> index, low, comp;
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack;
  int counter = 0;
  int components = 0;

  explicit Scc(const Tournament& tt)
      : t(tt), index(tt.order(), -1), low(tt.order(), 0), comp(tt.order(), -1), on_stack(tt.order(), false) {
    for (std::size_t v = 0; v < t.order(); ++v) {
      if (index[v] < 0) visit(v);
    }
  }

  void visit(std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for_each_bit(t.dominion_mask(v), [&](std::size_t w) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    });
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  }
};

}  // namespace

ChoiceSet top_cycle(const Tournament& t) {
  const Scc scc(t);
  // The top component is the one with no dominators outside itself.
  std::vector<Mask> members(scc.components, 0);
  for (std::size_t v = 0; v < t.order(); ++v) members[scc.comp[v]] |= bit(v);
  for (Mask m : members) {
    bool source = true;
    for_each_bit(m, [&](std::size_t v) {
      if ((t.dominators_mask(v) & ~m) != 0) source = false;
    });
    if (source) return ChoiceSet(t.order(), m);
  }
  throw std::logic_error("top_cycle: condensation has no source component");
}

ChoiceSet uncovered_set(const Tournament& t) {
  const Mask all = t.all_mask();
  Mask by_covering = 0;
  Mask by_two_steps = 0;
  for (std::size_t x = 0; x < t.order(); ++x) {
    bool covered = false;
    for_each_bit(t.dominators_mask(x), [&](std::size_t y) {
      if ((t.dominion_mask(x) & ~t.dominion_mask(y)) == 0) covered = true;
    });
    if (!covered) by_covering |= bit(x);

    Mask reach = t.dominion_mask(x);
    for_each_bit(t.dominion_mask(x), [&](std::size_t z) { reach |= t.dominion_mask(z); });
    if ((reach | bit(x)) == all) by_two_steps |= bit(x);
  }
  if (by_covering != by_two_steps) {
    throw std::logic_error("uncovered_set: covering and two-step characterizations disagree");
  }
  return ChoiceSet(t.order(), by_covering);
}

namespace {

class BanksSearch {
 public:
  BanksSearch(const Tournament& t, Alternative x) : t_(t), top_(x), domain_(t.dominion_mask(x)) {}

  BanksMembership run() {
    BanksMembership result;
    result.member = search(0, t_.dominators_mask(top_));
    result.nodes_explored = visited_.size();
    if (result.member) result.witness = ordered_chain(found_);
    return result;
  }

 private:
  bool search(Mask chain, Mask spoilers) {
    if (spoilers == 0) {
      found_ = chain;
      return true;
    }
    if (!visited_.insert(chain).second) return false;

    Mask insertable = 0;
    for_each_bit(domain_ & ~chain, [&](std::size_t b) {
      if (extends_transitively(t_, chain, b)) insertable |= bit(b);
    });

    // Every completion must beat each spoiler, so branch on the counters of
    // the spoiler with the fewest; ties by ascending index.
    Mask pivot_counters = 0;
    int best = 65;
    for_each_bit(spoilers, [&](std::size_t w) {
      const Mask counters = insertable & t_.dominators_mask(w);
      const int c = std::popcount(counters);
      if (c < best) {
        best = c;
        pivot_counters = counters;
      }
    });
    if (pivot_counters == 0) return false;

    bool hit = false;
    for_each_bit(pivot_counters, [&](std::size_t b) {
      if (!hit) hit = search(chain | bit(b), spoilers & t_.dominators_mask(b));
    });
    return hit;
  }

  std::vector<Alternative> ordered_chain(Mask chain) const {
    std::vector<Alternative> out;
    for_each_bit(chain, [&](std::size_t b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), [&](Alternative a, Alternative b) {
      return std::popcount(t_.dominion_mask(a) & chain) > std::popcount(t_.dominion_mask(b) & chain);
    });
    return out;
  }

  const Tournament& t_;
  Alternative top_;
  Mask domain_;
  Mask found_ = 0;
  std::unordered_set<Mask> visited_;
};

}  // namespace

BanksMembership banks_member(const Tournament& t, Alternative x) {
  if (x >= t.order()) throw std::out_of_range("banks_member: alternative out of range");
  return BanksSearch(t, x).run();
}

ChoiceSet banks_set(const Tournament& t, unsigned workers) {
  const std::size_t n = t.order();
  std::vector<char> member(n, 0);
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (w == 1) {
    for (std::size_t x = 0; x < n; ++x) member[x] = banks_member(t, x).member;
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < w; ++k) {
      pool.emplace_back([&, k] {
        for (std::size_t x = k; x < n; x += w) member[x] = banks_member(t, x).member;
      });
    }
  }
  Mask m = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (member[x]) m |= bit(x);
  }
  if (m == 0) throw std::logic_error("banks_set: empty result");
  return ChoiceSet(n, m);
}

BipartisanResult bipartisan_set(const Tournament& t) {
  Lottery p = solve_symmetric_zero_sum(t.skew_adjacency());
  ChoiceSet support = p.support();
  return BipartisanResult{support, std::move(p)};
}

}  // namespace tourney
