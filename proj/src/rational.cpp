#include "polydist/rational.hpp"

#include <cctype>

#include "polydist/errors.hpp"

namespace polydist {

Rat parse_rat(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("not a rational: '" + text + "'");
  i = num_end;
  if (i < n) {
    if (text[i] != '/') throw ParseError("not a rational: '" + text + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != n)
      throw ParseError("not a rational: '" + text + "'");
  }
  // mpq_set_str accepts a leading '-' but not '+'.
  Rat v(text[0] == '+' ? text.substr(1) : text, 10);
  if (v.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

std::string rat_str(const Rat& v) { return v.get_str(); }

Rat rat_sqrt_upper(const Rat& v, unsigned frac_bits) {
  if (sgn(v) < 0) throw Error(ErrorCode::Internal, "sqrt of negative value");
  if (sgn(v) == 0) return Rat(0);
  // sqrt(p/q) = sqrt(p*q)/q with integer radicand p*q >= 1.
  Int m = v.get_num() * v.get_den();
  Int shifted = m << (2 * frac_bits);
  Int s;
  mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
  Int den = v.get_den() << frac_bits;
  if (s * s != shifted) s += 1;
  Rat r(s, den);
  r.canonicalize();
  return r;
}

PowBracket pow_bracket(const Int& n, const Rat& exponent, unsigned frac_bits) {
  if (n < 1) throw Error(ErrorCode::Internal, "pow_bracket needs n >= 1");
  if (sgn(exponent) <= 0)
    throw Error(ErrorCode::Internal, "pow_bracket needs a positive exponent");
  const Int& p = exponent.get_num();
  const Int& q = exponent.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p())
    throw Error(ErrorCode::Internal, "pow_bracket exponent too large");
  Int np;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), p.get_ui());
  PowBracket out;
  if (q == 1) {
    out.lower = out.upper = Rat(np);
    out.exact = true;
    return out;
  }
  Int root;
  int exact = mpz_root(root.get_mpz_t(), np.get_mpz_t(), q.get_ui());
  if (exact != 0) {
    out.lower = out.upper = Rat(root);
    out.exact = true;
    return out;
  }
  // floor((np * 2^(q*b))^(1/q)) / 2^b brackets np^(1/q) to 2^-b relative.
  Int shifted = np << (frac_bits * q.get_ui());
  Int t;
  mpz_root(t.get_mpz_t(), shifted.get_mpz_t(), q.get_ui());
  Int den = Int(1) << frac_bits;
  out.lower = Rat(t, den);
  out.lower.canonicalize();
  out.upper = Rat(t + 1, den);
  out.upper.canonicalize();
  out.exact = false;
  return out;
}

Rat grid_ceil(const Rat& v, unsigned bits) {
  Int scaled_num = v.get_num() << bits;
  Int k;
  mpz_cdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), v.get_den().get_mpz_t());
  Rat r(k, Int(1) << bits);
  r.canonicalize();
  return r;
}

Rat grid_floor(const Rat& v, unsigned bits) {
  Int scaled_num = v.get_num() << bits;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), v.get_den().get_mpz_t());
  Rat r(k, Int(1) << bits);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

}  // namespace polydist
