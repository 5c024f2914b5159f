#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tourney/choice_set.hpp"

namespace tourney {

/// Arbitrary-precision rational in canonical form (reduced, positive
/// denominator, zero is 0/1). GMP canonicalizes after every arithmetic op.
using Rational = mpq_class;

/// Always "num/den", including integers ("0/1", "1/1").
std::string to_fraction_string(const Rational& q);

/// Inverse of to_fraction_string; also accepts a bare integer.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_fraction(const std::string& text);

/// Probability vector over 0..n-1 with exact weights.
class Lottery {
 public:
  Lottery() = default;
  /// Throws std::invalid_argument on a negative weight or a sum other than 1.
  explicit Lottery(std::vector<Rational> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t x) const { return weights_.at(x); }
  std::span<const Rational> weights() const noexcept { return weights_; }

  /// { x : weight(x) > 0 }.
  ChoiceSet support() const;

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  std::vector<Rational> weights_;
};

}  // namespace tourney
