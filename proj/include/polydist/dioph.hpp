#ifndef POLYDIST_DIOPH_HPP
#define POLYDIST_DIOPH_HPP

#include <vector>

#include "polydist/budgets.hpp"
#include "polydist/rational.hpp"

namespace polydist {

struct GammaVector {
  int d = 0;
  std::vector<Rat> gamma;
};

// Exact minimum of |sum n_l gamma^l| over nonzero integer coefficient
// vectors with |n_l| <= coeff_bound, on the exponent grid {0..L-1}^d.
// The witness is the minimizing vector, canonicalized so its weighted sum
// is >= 0 (for a zero sum, its first nonzero entry is positive), with ties
// broken lexicographically. rhs/pass are filled by km_margin_curve.
struct MarginReport {
  int L = 0;
  int coeff_bound = 0;
  Rat margin;
  std::vector<long> witness;
  Rat rhs;
  bool rhs_exact = true;
  bool pass = true;
};

// Monomials gamma_1^{l_1} ... gamma_d^{l_d} over {0..L-1}^d in row-major
// order of (l_1, .., l_d) (last index fastest). Throws BudgetExceeded when
// the grid has more than 64 entries.
std::vector<Rat> power_grid(const std::vector<Rat>& gamma, int L);

MarginReport km_margin(const GammaVector& gv, int L, int coeff_bound,
                       const Budgets& budgets = {}, int threads = 1);

// One report per bound, with rhs = bound^-(1+epsilon)L^d and pass decided
// by the exact cross-power comparison margin^q * bound^p >= 1. The rhs
// field is exact when the exponent is an integer, otherwise a certified
// upper bound to 64 fractional bits.
std::vector<MarginReport> km_margin_curve(const GammaVector& gv, int L,
                                          const std::vector<int>& bounds,
                                          const Rat& epsilon,
                                          const Budgets& budgets = {},
                                          int threads = 1);

// Exact minimum of |sum (j_l / N) gamma^l| over nonzero j with entries in
// {1-N..N-1}: the worst-case gap between distinct power-set base values.
// Equals km_margin(gv, L, N-1).margin / N.
Rat separation_floor(const GammaVector& gv, int L, int N,
                     const Budgets& budgets = {}, int threads = 1);

}  // namespace polydist

#endif
