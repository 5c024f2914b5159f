#pragma once

// The order-36 tournament whose Banks set and bipartisan set partition the
// alternatives, its outer-triangle reorientations, and its automorphisms.
//
// Alternatives are v^i_{j,k} with block i in {0,1,2,3}, triangle j and
// position k in {1,2,3}. Arithmetic on j and k is cyclic (3+1 = 1, 1-1 = 3);
// so is arithmetic on the outer block index i in {1,2,3}. The integer id is
// 9i + 3(j-1) + (k-1), so block 0 is {0..8} and triangle (i,j) is
// {9i+3(j-1), .., 9i+3(j-1)+2}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tourney/choice_set.hpp"
#include "tourney/permutation.hpp"
#include "tourney/tournament.hpp"

namespace tourney::paper36 {

inline constexpr std::size_t kOrder = 36;

struct Coordinates {
  int block;     // i in {0,1,2,3}
  int triangle;  // j in {1,2,3}
  int position;  // k in {1,2,3}

  friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

/// Throws std::out_of_range on an invalid coordinate.
Alternative vertex_id(Coordinates c);
/// Throws std::out_of_range for id >= 36.
Coordinates coordinates(Alternative id);
/// "v{i}_{j}_{k}"
std::string label(Alternative id);

/// 1 + ((x - 1) mod 3) mapped into {1,2,3}: next(3) = 1, prev(1) = 3.
constexpr int cyc(int x) { return ((x - 1) % 3 + 3) % 3 + 1; }

/// Block i: {9i..9i+8}.
ChoiceSet block(int i);
/// Triangle (i,j): three consecutive ids.
ChoiceSet triangle(int i, int j);

/// Orientation of the three internal edges of one small triangle.
/// Bit 0: k=1 beats k=2; bit 1: k=2 beats k=3; bit 2: k=3 beats k=1.
/// Codes 0 and 7 are the two 3-cycles, the other six are transitive.
class TriangleOrientation {
 public:
  constexpr TriangleOrientation() = default;
  /// Throws std::invalid_argument for code > 7.
  static TriangleOrientation from_code(unsigned code);
  /// The orientation k beats k+1 used by the base tournament.
  static constexpr TriangleOrientation cyclic() { return TriangleOrientation(7); }

  unsigned code() const noexcept { return code_; }
  bool is_cyclic() const noexcept { return code_ == 0 || code_ == 7; }
  /// Whether position a beats position b (a != b, both in {1,2,3}).
  bool beats(int a, int b) const;

  friend bool operator==(TriangleOrientation, TriangleOrientation) = default;

 private:
  constexpr explicit TriangleOrientation(unsigned code) : code_(code) {}
  unsigned code_ = 7;
};

/// Keyed by (block, triangle) with block, triangle in {1,2,3}.
using OrientationMap = std::map<std::pair<int, int>, TriangleOrientation>;

OrientationMap cyclic_orientations();
/// Each of the nine outer triangles gets an orientation code drawn from a
/// std::mt19937_64 seeded with `seed`.
OrientationMap random_orientations(std::uint64_t seed);

/// Which of the six defining rules decided a pair.
enum class Rule : std::uint8_t {
  kWithinTriangle = 1,      // v^i_{j,k} > v^i_{j,k+1}
  kAcrossTriangles = 2,     // v^i_{j,*} > v^i_{j+1,*}
  kCenterOverBlock = 3,     // v^0_{j,*} > v^j_{*,*}
  kCenterVsPrevBlock = 4,   // v^0_{j,k} > v^{j-1}_{l,*} iff k = l
  kCenterVsNextBlock = 5,   // v^0_{j,k} > v^{j+1}_{*,l} iff k = l
  kOuterVsPrevBlock = 6,    // v^j_{k,*} > v^{j-1}_{*,l} iff k = l-1
};

/// Every rule instance governing the unordered pair {x,y}; each entry is
/// the rule and the winner it assigns.
struct RuleDecision {
  Rule rule;
  Alternative winner;
};
std::vector<RuleDecision> decide_pair(Alternative x, Alternative y,
                                      const OrientationMap& outer);

/// Rule-coverage audit over all 630 unordered pairs.
struct CoverageAudit {
  std::size_t pairs = 0;
  std::size_t uncovered = 0;
  std::size_t multiply_covered = 0;
  std::array<std::size_t, 7> by_rule{};  // index = Rule value
  bool ok() const noexcept { return uncovered == 0 && multiply_covered == 0; }
};
CoverageAudit audit_rule_coverage(const OrientationMap& outer);

/// Builds the tournament from the six rules, asserting that every pair is
/// decided by exactly one rule instance (std::logic_error otherwise).
Tournament build_t36();

/// Same with the within-triangle rule replaced inside the nine outer
/// triangles (block 1..3) by the supplied orientations. Block-0 triangles
/// stay cyclic. Throws std::invalid_argument unless exactly the nine keys
/// (i,j), i,j in {1,2,3}, are present.
Tournament build_t36_variant(const OrientationMap& outer);

/// Rotation of the whole figure: v^0_{i,j} -> v^0_{i+1,j},
/// v^i_{j,k} -> v^{i+1}_{j,k}.
Permutation phi();
/// psi_l: rotates positions in triangle (0,l), fixes block l, rotates the
/// triangles of block l-1 and the positions in block l+1.
/// Throws std::out_of_range for l outside {1,2,3}.
Permutation psi(int l);
/// {phi, psi_1, psi_2, psi_3}
std::vector<Permutation> generators();

/// Orbits of the group generated by `generators`, each sorted, ordered by
/// smallest member. Throws std::invalid_argument if a generator is not an
/// automorphism of t.
std::vector<ChoiceSet> orbits(const Tournament& t,
                              const std::vector<Permutation>& generators);

}  // namespace tourney::paper36
