#ifndef POLYDIST_RATSET_HPP
#define POLYDIST_RATSET_HPP

#include <cstdint>
#include <vector>

#include "polydist/rational.hpp"

namespace polydist {

// Finite set of rationals over a single common denominator: den >= 1 and a
// sorted, duplicate-free list of numerators, reduced so that no integer > 1
// divides den together with every numerator. The representation is
// canonical, so equal sets compare equal structurally.
class RatSet {
 public:
  RatSet() : den_(1) {}

  static RatSet singleton(const Rat& v);
  static RatSet from_values(const std::vector<Rat>& values);

  std::size_t size() const { return nums_.size(); }
  bool empty() const { return nums_.empty(); }
  const Int& den() const { return den_; }
  const std::vector<Int>& nums() const { return nums_; }

  std::vector<Rat> values() const;
  bool contains(const Rat& v) const;
  Rat max_abs() const;  // largest |element|; set must be nonempty

  // True when the set equals its negation (projection value sets of
  // symmetric difference sets always are).
  bool is_symmetric() const;

  RatSet scaled(const Rat& factor) const;

  friend RatSet sumset(const RatSet& a, const RatSet& b,
                       std::uint64_t value_budget);

  friend bool operator==(const RatSet& a, const RatSet& b) {
    return a.den_ == b.den_ && a.nums_ == b.nums_;
  }

 private:
  Int den_;
  std::vector<Int> nums_;
  void canonicalize();
};

RatSet sumset(const RatSet& a, const RatSet& b, std::uint64_t value_budget);

}  // namespace polydist

#endif
