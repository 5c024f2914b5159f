#include "tourney/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "tourney/error.hpp"

namespace tourney {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch in composition");
  std::vector<std::size_t> image(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) image[x] = a.image_[b.image_[x]];
  return Permutation(std::move(image));
}

ChoiceSet Permutation::apply(const ChoiceSet& s) const {
  if (s.carrier_order() != size()) throw std::invalid_argument("Permutation: size mismatch");
  Mask m = 0;
  for_each_bit(s.mask(), [&](std::size_t x) { m |= bit(image_[x]); });
  return ChoiceSet(size(), m);
}

Tournament apply_permutation(const Tournament& t, const Permutation& sigma) {
  if (sigma.size() != t.order()) throw InvalidTournament("apply_permutation: size mismatch");
  std::vector<Mask> dominion(t.order(), 0);
  for (std::size_t x = 0; x < t.order(); ++x) {
    Mask row = 0;
    for_each_bit(t.dominion_mask(x), [&](std::size_t y) { row |= bit(sigma(y)); });
    dominion[sigma(x)] = row;
  }
  return Tournament::from_dominion_masks(std::move(dominion));
}

bool is_automorphism(const Tournament& t, const Permutation& sigma) {
  if (sigma.size() != t.order()) throw InvalidTournament("is_automorphism: size mismatch");
  for (std::size_t x = 0; x < t.order(); ++x) {
    Mask row = 0;
    for_each_bit(t.dominion_mask(x), [&](std::size_t y) { row |= bit(sigma(y)); });
    if (row != t.dominion_mask(sigma(x))) return false;
  }
  return true;
}

}  // namespace tourney
