#include "polydist/ratset.hpp"

#include <algorithm>

#include "polydist/errors.hpp"

namespace polydist {

void RatSet::canonicalize() {
  std::sort(nums_.begin(), nums_.end());
  nums_.erase(std::unique(nums_.begin(), nums_.end()), nums_.end());
  if (nums_.empty()) {
    den_ = 1;
    return;
  }
  Int g = den_;
  for (const Int& n : nums_) {
    g = gcd(g, n);
    if (g == 1) return;
  }
  for (Int& n : nums_) n /= g;
  den_ /= g;
}

RatSet RatSet::singleton(const Rat& v) {
  RatSet s;
  s.den_ = v.get_den();
  s.nums_.push_back(v.get_num());
  return s;
}

RatSet RatSet::from_values(const std::vector<Rat>& values) {
  RatSet s;
  for (const Rat& v : values) s.den_ = lcm(s.den_, v.get_den());
  s.nums_.reserve(values.size());
  for (const Rat& v : values)
    s.nums_.push_back(v.get_num() * (s.den_ / v.get_den()));
  s.canonicalize();
  return s;
}

std::vector<Rat> RatSet::values() const {
  std::vector<Rat> out;
  out.reserve(nums_.size());
  for (const Int& n : nums_) {
    Rat v(n, den_);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

bool RatSet::contains(const Rat& v) const {
  if (!mpz_divisible_p(den_.get_mpz_t(), v.get_den().get_mpz_t()))
    return false;
  Int n = v.get_num() * (den_ / v.get_den());
  return std::binary_search(nums_.begin(), nums_.end(), n);
}

Rat RatSet::max_abs() const {
  if (nums_.empty())
    throw Error(ErrorCode::Internal, "max_abs of an empty set");
  Int m = std::max(Int(-nums_.front()), nums_.back());
  Rat v(m, den_);
  v.canonicalize();
  return v;
}

bool RatSet::is_symmetric() const {
  const std::size_t n = nums_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (nums_[i] != -nums_[n - 1 - i]) return false;
  return true;
}

RatSet RatSet::scaled(const Rat& factor) const {
  RatSet out;
  out.den_ = den_ * factor.get_den();
  out.nums_.reserve(nums_.size());
  for (const Int& n : nums_) out.nums_.push_back(n * factor.get_num());
  out.canonicalize();
  return out;
}

RatSet sumset(const RatSet& a, const RatSet& b, std::uint64_t value_budget) {
  if (a.empty() || b.empty()) return RatSet();
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  if (pairs > value_budget)
    throw BudgetExceeded("sumset needs " + std::to_string(pairs) +
                         " candidate values, budget is " +
                         std::to_string(value_budget));
  RatSet out;
  out.den_ = lcm(a.den_, b.den_);
  Int fa = out.den_ / a.den_;
  Int fb = out.den_ / b.den_;
  out.nums_.reserve(pairs);
  for (const Int& na : a.nums_) {
    Int base = na * fa;
    for (const Int& nb : b.nums_) out.nums_.push_back(base + nb * fb);
  }
  out.canonicalize();
  return out;
}

}  // namespace polydist
