#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tourney {

/// Bit x set means alternative x is present.
using Mask = std::uint64_t;

/// Largest tournament order representable with one-word dominance rows.
inline constexpr std::size_t kMaxOrder = 64;

constexpr Mask bit(std::size_t x) { return Mask{1} << x; }

constexpr Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Calls fn(x) for every set bit x in ascending order.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// A subset of the alternatives of a tournament of a given order.
class ChoiceSet {
 public:
  ChoiceSet() = default;
  /// Throws std::out_of_range if `members` has bits at or above `order`.
  ChoiceSet(std::size_t order, Mask members);

  static ChoiceSet empty_of(std::size_t order) { return ChoiceSet(order, 0); }
  static ChoiceSet full(std::size_t order);
  static ChoiceSet of(std::size_t order, std::initializer_list<std::size_t> xs);
  static ChoiceSet of(std::size_t order, const std::vector<std::size_t>& xs);
  /// Alternatives first, first+1, ..., last-1.
  static ChoiceSet range(std::size_t order, std::size_t first, std::size_t last);

  std::size_t carrier_order() const noexcept { return order_; }
  Mask mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(std::size_t x) const noexcept { return x < order_ && (mask_ & bit(x)) != 0; }
  bool subset_of(const ChoiceSet& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  bool disjoint_from(const ChoiceSet& other) const noexcept {
    return (mask_ & other.mask_) == 0;
  }

  std::vector<std::size_t> members() const;
  /// Smallest member. Precondition: nonempty.
  std::size_t front() const noexcept { return static_cast<std::size_t>(std::countr_zero(mask_)); }

  ChoiceSet complement() const { return ChoiceSet(order_, ~mask_ & low_bits(order_)); }

  friend ChoiceSet operator&(const ChoiceSet& a, const ChoiceSet& b) {
    return ChoiceSet(a.order_, a.mask_ & b.mask_);
  }
  friend ChoiceSet operator|(const ChoiceSet& a, const ChoiceSet& b) {
    return ChoiceSet(a.order_, a.mask_ | b.mask_);
  }
  friend ChoiceSet operator-(const ChoiceSet& a, const ChoiceSet& b) {
    return ChoiceSet(a.order_, a.mask_ & ~b.mask_);
  }
  friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;

  /// "{0, 3, 7}"
  std::string to_string() const;

 private:
  std::size_t order_ = 0;
  Mask mask_ = 0;
};

}  // namespace tourney
