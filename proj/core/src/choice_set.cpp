#include "tourney/choice_set.hpp"

#include <stdexcept>

namespace tourney {

ChoiceSet::ChoiceSet(std::size_t order, Mask members) : order_(order), mask_(members) {
  if (order > kMaxOrder) throw std::out_of_range("ChoiceSet: order exceeds 64");
  if ((members & ~low_bits(order)) != 0) {
    throw std::out_of_range("ChoiceSet: member outside carrier");
  }
}

ChoiceSet ChoiceSet::full(std::size_t order) { return ChoiceSet(order, low_bits(order)); }

ChoiceSet ChoiceSet::of(std::size_t order, std::initializer_list<std::size_t> xs) {
  return of(order, std::vector<std::size_t>(xs));
}

ChoiceSet ChoiceSet::of(std::size_t order, const std::vector<std::size_t>& xs) {
  Mask m = 0;
  for (std::size_t x : xs) {
    if (x >= order) throw std::out_of_range("ChoiceSet: member outside carrier");
    m |= bit(x);
  }
  return ChoiceSet(order, m);
}

ChoiceSet ChoiceSet::range(std::size_t order, std::size_t first, std::size_t last) {
  if (first > last || last > order) throw std::out_of_range("ChoiceSet: bad range");
  return ChoiceSet(order, low_bits(last) & ~low_bits(first));
}

std::vector<std::size_t> ChoiceSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each_bit(mask_, [&](std::size_t x) { out.push_back(x); });
  return out;
}

std::string ChoiceSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_bit(mask_, [&](std::size_t x) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

}  // namespace tourney
