#include "tourney/paper36.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace tourney::paper36 {

Alternative vertex_id(Coordinates c) {
  if (c.block < 0 || c.block > 3 || c.triangle < 1 || c.triangle > 3 || c.position < 1 || c.position > 3) {
    throw std::out_of_range("paper36: coordinate out of range");
  }
  return static_cast<Alternative>(9 * c.block + 3 * (c.triangle - 1) + (c.position - 1));
}

Coordinates coordinates(Alternative id) {
  if (id >= kOrder) throw std::out_of_range("paper36: id out of range");
  const int v = static_cast<int>(id);
  return Coordinates{v / 9, (v % 9) / 3 + 1, v % 3 + 1};
}

std::string label(Alternative id) {
  const Coordinates c = coordinates(id);
  return "v" + std::to_string(c.block) + "_" + std::to_string(c.triangle) + "_" + std::to_string(c.position);
}

ChoiceSet block(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("paper36: block out of range");
  return ChoiceSet::range(kOrder, 9 * i, 9 * i + 9);
}

ChoiceSet triangle(int i, int j) {
  const Alternative first = vertex_id({i, j, 1});
  return ChoiceSet::range(kOrder, first, first + 3);
}

TriangleOrientation TriangleOrientation::from_code(unsigned code) {
  if (code > 7) throw std::invalid_argument("triangle orientation code must be in [0, 7]");
  return TriangleOrientation(code);
}

bool TriangleOrientation::beats(int a, int b) const {
  // Edge between a and cyc(a+1) is bit a-1, oriented forward when set.
  if (b == cyc(a + 1)) return (code_ >> (a - 1)) & 1u;
  if (a == cyc(b + 1)) return !((code_ >> (b - 1)) & 1u);
  throw std::invalid_argument("TriangleOrientation::beats: positions must differ");
}

OrientationMap cyclic_orientations() {
  OrientationMap m;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m[{i, j}] = TriangleOrientation::cyclic();
  }
  return m;
}

OrientationMap random_orientations(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  OrientationMap m;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m[{i, j}] = TriangleOrientation::from_code(static_cast<unsigned>(gen() >> 61));
  }
  return m;
}

namespace {

void validate(const OrientationMap& outer) {
  if (outer.size() != 9) throw std::invalid_argument("expected orientations for exactly nine outer triangles");
  for (const auto& [key, orientation] : outer) {
    const auto [i, j] = key;
    if (i < 1 || i > 3 || j < 1 || j > 3) {
      throw std::invalid_argument("orientation key (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not an outer triangle");
    }
  }
}

// Rule instances in which x appears in the left-hand role; the bool in each
// decision says whether x is the winner. Pair-level coverage is assembled by
// calling this for both (x,y) and (y,x).
void governed(Alternative x, Alternative y, const OrientationMap& outer, std::vector<RuleDecision>& out) {
  const Coordinates a = coordinates(x);
  const Coordinates b = coordinates(y);
  auto decide = [&](Rule r, bool x_wins) { out.push_back({r, x_wins ? x : y}); };

  if (a.block == b.block && a.triangle == b.triangle) {
    // v^i_{j,k} > v^i_{j,k+1}, or the supplied orientation on outer blocks.
    if (b.position == cyc(a.position + 1)) {
      if (a.block == 0) {
        decide(Rule::kWithinTriangle, true);
      } else {
        decide(Rule::kWithinTriangle, outer.at({a.block, a.triangle}).beats(a.position, b.position));
      }
    }
    return;
  }
  if (a.block == b.block) {
    // v^i_{j,*} > v^i_{j+1,*}
    if (b.triangle == cyc(a.triangle + 1)) decide(Rule::kAcrossTriangles, true);
    return;
  }
  if (a.block == 0) {
    const int j = a.triangle;
    const int k = a.position;
    // v^0_{j,*} > v^j_{*,*}
    if (b.block == j) decide(Rule::kCenterOverBlock, true);
    // v^0_{j,k} > v^{j-1}_{l,*} iff k = l
    if (b.block == cyc(j - 1)) decide(Rule::kCenterVsPrevBlock, k == b.triangle);
    // v^0_{j,k} > v^{j+1}_{*,l} iff k = l
    if (b.block == cyc(j + 1)) decide(Rule::kCenterVsNextBlock, k == b.position);
    return;
  }
  if (b.block != 0 && b.block == cyc(a.block - 1)) {
    // v^j_{k,*} > v^{j-1}_{*,l} iff k = l-1
    decide(Rule::kOuterVsPrevBlock, a.triangle == cyc(b.position - 1));
  }
}

Tournament build(const OrientationMap& outer) {
  std::vector<Mask> dominion(kOrder, 0);
  std::vector<RuleDecision> decisions;
  for (Alternative x = 0; x < kOrder; ++x) {
    for (Alternative y = x + 1; y < kOrder; ++y) {
      decisions.clear();
      governed(x, y, outer, decisions);
      governed(y, x, outer, decisions);
      if (decisions.size() != 1) {
        throw std::logic_error("pair (" + label(x) + ", " + label(y) + ") decided by " +
                               std::to_string(decisions.size()) + " rule instances");
      }
      const Alternative w = decisions.front().winner;
      dominion[w] |= bit(w == x ? y : x);
    }
  }
  return Tournament::from_dominion_masks(std::move(dominion));
}

}  // namespace

std::vector<RuleDecision> decide_pair(Alternative x, Alternative y, const OrientationMap& outer) {
  validate(outer);
  if (x >= kOrder || y >= kOrder || x == y) throw std::out_of_range("decide_pair: need two distinct ids < 36");
  std::vector<RuleDecision> decisions;
  governed(x, y, outer, decisions);
  governed(y, x, outer, decisions);
  return decisions;
}

CoverageAudit audit_rule_coverage(const OrientationMap& outer) {
  validate(outer);
  CoverageAudit audit;
  std::vector<RuleDecision> decisions;
  for (Alternative x = 0; x < kOrder; ++x) {
    for (Alternative y = x + 1; y < kOrder; ++y) {
      decisions.clear();
      governed(x, y, outer, decisions);
      governed(y, x, outer, decisions);
      ++audit.pairs;
      if (decisions.empty()) ++audit.uncovered;
      if (decisions.size() > 1) ++audit.multiply_covered;
      for (const RuleDecision& d : decisions) ++audit.by_rule[static_cast<std::size_t>(d.rule)];
    }
  }
  return audit;
}

Tournament build_t36() { return build(cyclic_orientations()); }

Tournament build_t36_variant(const OrientationMap& outer) {
  validate(outer);
  return build(outer);
}

Permutation phi() {
  std::vector<std::size_t> image(kOrder);
  for (Alternative v = 0; v < kOrder; ++v) {
    Coordinates c = coordinates(v);
    if (c.block == 0) {
      c.triangle = cyc(c.triangle + 1);
    } else {
      c.block = cyc(c.block + 1);
    }
    image[v] = vertex_id(c);
  }
  return Permutation(std::move(image));
}

Permutation psi(int l) {
  if (l < 1 || l > 3) throw std::out_of_range("psi: index must be in {1,2,3}");
  std::vector<std::size_t> image(kOrder);
  for (Alternative v = 0; v < kOrder; ++v) {
    Coordinates c = coordinates(v);
    if (c.block == 0) {
      if (c.triangle == l) c.position = cyc(c.position + 1);
    } else if (c.block == cyc(l - 1)) {
      c.triangle = cyc(c.triangle + 1);
    } else if (c.block == cyc(l + 1)) {
      c.position = cyc(c.position + 1);
    }
    image[v] = vertex_id(c);
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> generators() { return {phi(), psi(1), psi(2), psi(3)}; }

std::vector<ChoiceSet> orbits(const Tournament& t, const std::vector<Permutation>& gens) {
  for (const Permutation& g : gens) {
    if (!is_automorphism(t, g)) throw std::invalid_argument("orbits: generator is not an automorphism");
  }
  const std::size_t n = t.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = find(x);
      const std::size_t b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Mask> by_root(n, 0);
  for (std::size_t x = 0; x < n; ++x) by_root[find(x)] |= bit(x);
  std::vector<ChoiceSet> out;
  for (Mask m : by_root) {
    if (m != 0) out.emplace_back(n, m);
  }
  return out;
}

}  // namespace tourney::paper36
