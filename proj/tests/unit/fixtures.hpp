#pragma once

#include "tourney/paper36.hpp"
#include "tourney/tournament.hpp"

namespace tourney::testing {

// 0 > 1 > 2 > 0
inline Tournament three_cycle() {
  return Tournament::from_matrix({{false, true, false}, {false, false, true}, {true, false, false}});
}

inline const Tournament& t36() {
  static const Tournament t = paper36::build_t36();
  return t;
}

}  // namespace tourney::testing
