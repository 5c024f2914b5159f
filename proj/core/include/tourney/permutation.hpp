#pragma once

#include <cstddef>
#include <vector>

#include "tourney/choice_set.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Bijection on 0..size-1; maps x to image[x].
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t x) const { return image_.at(x); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  Permutation inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  ChoiceSet apply(const ChoiceSet& s) const;

 private:
  std::vector<std::size_t> image_;
};

/// Relabels T so that sigma(x) beats sigma(y) iff x beats y.
/// Throws InvalidTournament on a size mismatch.
Tournament apply_permutation(const Tournament& t, const Permutation& sigma);

/// Throws InvalidTournament on a size mismatch.
bool is_automorphism(const Tournament& t, const Permutation& sigma);

}  // namespace tourney
