#ifndef POLYDIST_RATIONAL_HPP
#define POLYDIST_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace polydist {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" (optional sign, decimal digits) into a reduced
// rational. Throws ParseError on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Reduced string form "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& v);

// Certified upper bound of sqrt(v) for v >= 0: exact when v is the square
// of a rational, otherwise within relative error 2^-frac_bits above the
// true root. The result is always >= sqrt(v).
Rat rat_sqrt_upper(const Rat& v, unsigned frac_bits);

// Certified bracket of n^(e) for an integer n >= 1 and a rational exponent
// e > 0. If n^e is rational the bracket collapses (lower == upper, exact);
// otherwise lower <= n^e <= upper with relative gap <= 2^-frac_bits.
struct PowBracket {
  Rat lower;
  Rat upper;
  bool exact = false;
};
PowBracket pow_bracket(const Int& n, const Rat& exponent, unsigned frac_bits);

// Smallest multiple of 2^-bits that is >= v (resp. largest <= v).
Rat grid_ceil(const Rat& v, unsigned bits);
Rat grid_floor(const Rat& v, unsigned bits);

inline Rat abs_rat(const Rat& v) { return sgn(v) < 0 ? Rat(-v) : v; }

// base^exp with an integer exponent, exact.
Rat rat_pow(const Rat& base, unsigned long exp);

}  // namespace polydist

#endif
