#include "polydist/dioph.hpp"

#include <algorithm>
#include <thread>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

struct Candidate {
  Rat margin;
  std::vector<long> witness;
  bool valid = false;
};

std::vector<long> canonical_witness(const std::vector<long>& n, int value_sign) {
  bool flip;
  if (value_sign != 0) {
    flip = value_sign < 0;
  } else {
    flip = false;
    for (long e : n) {
      if (e != 0) {
        flip = e < 0;
        break;
      }
    }
  }
  if (!flip) return n;
  std::vector<long> out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) out[i] = -n[i];
  return out;
}

void offer(Candidate& best, const Rat& margin, const std::vector<long>& n,
           int value_sign) {
  if (best.valid) {
    int c = cmp(margin, best.margin);
    if (c > 0) return;
    if (c == 0) {
      std::vector<long> canon = canonical_witness(n, value_sign);
      if (canon < best.witness) best.witness = std::move(canon);
      return;
    }
  }
  best.margin = margin;
  best.witness = canonical_witness(n, value_sign);
  best.valid = true;
}

// Scans `count` coefficient vectors starting at odometer index `start`
// (row-major over {-B..B}^E, first coordinate slowest).
void scan_range(const std::vector<Rat>& powers, long B, std::uint64_t radix,
                std::uint64_t zero_index, std::uint64_t start,
                std::uint64_t count, Candidate& best) {
  const int E = static_cast<int>(powers.size());
  std::vector<long> n(E);
  std::uint64_t rem = start;
  for (int e = E - 1; e >= 0; --e) {
    n[e] = static_cast<long>(rem % radix) - B;
    rem /= radix;
  }
  Rat value(0);
  for (int e = 0; e < E; ++e) value += Rat(n[e]) * powers[e];
  std::vector<Rat> wrap(E);  // subtracted when a digit wraps from B to -B
  for (int e = 0; e < E; ++e) wrap[e] = Rat(2 * B) * powers[e];

  std::uint64_t idx = start;
  for (std::uint64_t step = 0; step < count; ++step, ++idx) {
    if (idx != zero_index) {
      int s = sgn(value);
      Rat margin = s < 0 ? Rat(-value) : value;
      offer(best, margin, n, s);
    }
    int e = E - 1;
    while (e >= 0 && n[e] == B) {
      value -= wrap[e];
      n[e] = -B;
      --e;
    }
    if (e >= 0) {
      value += powers[e];
      ++n[e];
    }
  }
}

}  // namespace

std::vector<Rat> power_grid(const std::vector<Rat>& gamma, int L) {
  const int d = static_cast<int>(gamma.size());
  if (d < 1 || L < 1)
    throw Error(ErrorCode::Internal, "power_grid needs d >= 1, L >= 1");
  std::uint64_t size = 1;
  for (int k = 0; k < d; ++k) {
    size *= static_cast<std::uint64_t>(L);
    if (size > 64)
      throw BudgetExceeded("exponent grid exceeds 64 entries");
  }
  std::vector<Rat> powers;
  powers.reserve(size);
  std::vector<int> l(d, 0);
  for (;;) {
    Rat w(1);
    for (int k = 0; k < d; ++k)
      w *= rat_pow(gamma[k], static_cast<unsigned long>(l[k]));
    powers.push_back(w);
    int k = d - 1;
    while (k >= 0 && l[k] == L - 1) l[k--] = 0;
    if (k < 0) break;
    ++l[k];
  }
  return powers;
}

MarginReport km_margin(const GammaVector& gv, int L, int coeff_bound,
                       const Budgets& budgets, int threads) {
  if (gv.d < 1 || gv.gamma.size() != static_cast<std::size_t>(gv.d))
    throw Error(ErrorCode::Internal, "gamma vector dimension mismatch");
  if (coeff_bound < 1)
    throw Error(ErrorCode::Internal, "coefficient bound must be >= 1");
  std::vector<Rat> powers = power_grid(gv.gamma, L);
  const int E = static_cast<int>(powers.size());
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(coeff_bound) + 1;
  std::uint64_t total = 1;
  for (int e = 0; e < E; ++e) {
    if (total > budgets.km_vectors / radix)
      throw BudgetExceeded("coefficient enumeration exceeds the budget of " +
                           std::to_string(budgets.km_vectors) + " vectors");
    total *= radix;
  }
  std::uint64_t zero_index = 0;
  for (int e = 0; e < E; ++e)
    zero_index = zero_index * radix + static_cast<std::uint64_t>(coeff_bound);

  int workers = std::max(1, threads);
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);
  std::vector<Candidate> results(workers);
  if (workers == 1) {
    scan_range(powers, coeff_bound, radix, zero_index, 0, total, results[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      std::uint64_t start = chunk * static_cast<std::uint64_t>(t);
      std::uint64_t count = std::min(chunk, total - start);
      pool.emplace_back(&scan_range, std::cref(powers),
                        static_cast<long>(coeff_bound), radix, zero_index,
                        start, count, std::ref(results[t]));
      if (start + count >= total) break;
    }
    for (std::thread& th : pool) th.join();
  }
  Candidate best;
  for (const Candidate& c : results) {
    if (!c.valid) continue;
    if (!best.valid || c.margin < best.margin ||
        (c.margin == best.margin && c.witness < best.witness))
      best = c;
  }
  MarginReport report;
  report.L = L;
  report.coeff_bound = coeff_bound;
  report.margin = best.margin;
  report.witness = best.witness;
  report.rhs = Rat(0);
  report.rhs_exact = true;
  report.pass = true;
  return report;
}

std::vector<MarginReport> km_margin_curve(const GammaVector& gv, int L,
                                          const std::vector<int>& bounds,
                                          const Rat& epsilon,
                                          const Budgets& budgets, int threads) {
  if (sgn(epsilon) <= 0)
    throw Error(ErrorCode::Internal, "epsilon must be positive");
  const Rat exponent =
      (Rat(1) + epsilon) * Rat(Int(power_grid(gv.gamma, L).size()));
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
    throw Error(ErrorCode::Internal, "comparison exponent too large");
  const unsigned long p = exponent.get_num().get_ui();
  const unsigned long q = exponent.get_den().get_ui();
  std::vector<MarginReport> out;
  out.reserve(bounds.size());
  for (int bound : bounds) {
    MarginReport report = km_margin(gv, L, bound, budgets, threads);
    PowBracket bp = pow_bracket(Int(bound), exponent, 64);
    report.rhs = Rat(1) / bp.lower;
    report.rhs_exact = bp.exact;
    // margin >= bound^-exponent decided exactly via cross powers.
    Int bound_p;
    mpz_ui_pow_ui(bound_p.get_mpz_t(), static_cast<unsigned long>(bound), p);
    report.pass = rat_pow(report.margin, q) * Rat(bound_p) >= 1;
    out.push_back(std::move(report));
  }
  return out;
}

Rat separation_floor(const GammaVector& gv, int L, int N,
                     const Budgets& budgets, int threads) {
  if (N < 2) throw Error(ErrorCode::Internal, "separation floor needs N >= 2");
  MarginReport report = km_margin(gv, L, N - 1, budgets, threads);
  return report.margin / N;
}

}  // namespace polydist
