#include "polydist/sepset.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "polydist/dioph.hpp"
#include "polydist/errors.hpp"
#include "polydist/rng.hpp"

namespace polydist {

namespace {

Int int_pow(int base, int exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

void check_membership(const std::vector<Point2>& points) {
  const Rat quarter(1, 4);
  for (const Point2& p : points)
    if (euclid_sq(p) > quarter)
      throw MembershipViolation(
          "point (" + rat_str(p.x1) + ", " + rat_str(p.x2) +
          ") leaves the Euclidean ball of radius 1/2");
}

// Arithmetic progression { m * step : m in [-(N-1), N-1] } as a RatSet.
RatSet difference_progression(const Rat& step, int N) {
  std::vector<Rat> vals;
  vals.reserve(2 * N - 1);
  for (int m = -(N - 1); m <= N - 1; ++m) vals.push_back(Rat(m) * step);
  return RatSet::from_values(vals);
}

Int floor_quotient(const Rat& x, const Rat& w) {
  // floor(x / w) for w > 0.
  Int num = x.get_num() * w.get_den();
  Int den = x.get_den() * w.get_num();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

Rat min_distance_exact(const std::vector<Point2>& points,
                       const PolygonalNorm& norm,
                       std::size_t brute_threshold) {
  const std::size_t n = points.size();
  if (n < 2)
    throw Error(ErrorCode::Internal, "min_distance_exact needs >= 2 points");
  if (n <= brute_threshold) {
    Rat best(-1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rat dist = eval_norm(norm, points[i] - points[j]);
        if (best < 0 || dist < best) best = dist;
      }
    return best;
  }

  std::vector<Point2> sorted = points;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  Rat upper(-1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rat dist = eval_norm(norm, sorted[i + 1] - sorted[i]);
    if (upper < 0 || dist < upper) upper = dist;
  }
  if (sgn(upper) == 0) return upper;  // duplicate points
  // Any pair closer than `upper` in X-norm is within rho * upper in each
  // Euclidean coordinate, so it lives in the same or an adjacent cell of a
  // grid with that width.
  Rat rho = rat_sqrt_upper(circumradius_sq(norm), 64);
  Rat width = rho * upper;
  std::map<std::pair<Int, Int>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    cells[{floor_quotient(sorted[i].x1, width),
           floor_quotient(sorted[i].x2, width)}]
        .push_back(i);

  Rat best = upper;
  auto consider = [&](std::size_t i, std::size_t j) {
    Rat dist = eval_norm(norm, sorted[i] - sorted[j]);
    if (dist < best) best = dist;
  };
  const std::pair<long, long> forward[] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
  for (const auto& [key, members] : cells) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        consider(members[i], members[j]);
    for (const auto& [dx, dy] : forward) {
      auto it = cells.find({key.first + dx, key.second + dy});
      if (it == cells.end()) continue;
      for (std::size_t i : members)
        for (std::size_t j : it->second) consider(i, j);
    }
  }
  return best;
}

SeparatedSet build_lattice_set(const PolygonalNorm& norm,
                               const LatticeSpec& spec_in,
                               const Budgets& budgets) {
  LatticeSpec spec = spec_in;
  for (Rat& uk : spec.u) uk.canonicalize();
  validate(norm);
  if (norm.K != spec.K)
    throw Error(ErrorCode::InvalidNorm,
                "norm has K=" + std::to_string(norm.K) + " but " +
                    std::to_string(spec.K) + " functionals were requested");
  if (spec.K < 2 || spec.N < 2)
    throw Error(ErrorCode::InvalidNorm, "lattice build needs K >= 2, N >= 2");
  if (spec.u.size() != static_cast<std::size_t>(spec.K))
    throw Error(ErrorCode::InvalidNorm, "expected K scale parameters");
  for (const Rat& uk : spec.u)
    if (uk < 1 || uk > 2)
      throw Error(ErrorCode::InvalidNorm,
                  "scale parameter " + rat_str(uk) + " outside [1, 2]");

  const int K = spec.K;
  const int N = spec.N;
  Int n = int_pow(N, K);
  if (cmp(n, budgets.points) > 0)
    throw BudgetExceeded("lattice set has " + n.get_str() +
                         " points, budget is " + std::to_string(budgets.points));

  std::vector<Point2> v(K);
  for (int k = 0; k < K; ++k) v[k] = spec.u[k] * norm.a[k];
  const Rat sigma(1, 4 * K);

  std::vector<Point2> points;
  points.reserve(n.get_ui());
  std::vector<int> j(K, 1);
  for (;;) {
    Point2 x{Rat(0), Rat(0)};
    for (int k = 0; k < K; ++k) {
      Rat coeff(j[k], N);
      coeff.canonicalize();
      x = x + coeff * v[k];
    }
    points.push_back(sigma * x);
    int k = K - 1;
    while (k >= 0 && j[k] == N) j[k--] = 1;
    if (k < 0) break;
    ++j[k];
  }

  std::sort(points.begin(), points.end(), lex_less);
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] == points[i + 1])
      throw ParameterCollision(
          "two index tuples give the point (" + rat_str(points[i].x1) + ", " +
          rat_str(points[i].x2) + "); the scale vector lies in the bad set");
  check_membership(points);

  SeparatedSet set;
  set.points = std::move(points);
  set.n = n;
  set.norm = norm;
  set.proj_counts.resize(K);
  set.proj_values.resize(K);
  for (int k = 0; k < K; ++k) {
    RatSet acc = RatSet::singleton(Rat(0));
    for (int k2 = 0; k2 < K; ++k2) {
      if (k2 == k) continue;  // a_k . b_k = 0 contributes nothing
      Rat coef = sigma * Rat(1, N) * spec.u[k2] * dot(norm.a[k2], norm.b[k]);
      acc = sumset(acc, difference_progression(coef, N), budgets.values);
    }
    set.proj_values[k] = std::move(acc);
    set.proj_counts[k] = set.proj_values[k].size();
  }
  set.min_distance = min_distance_exact(set.points, norm);
  set.scale_note = "A = (4K)^-1 S with K = " + std::to_string(K);
  set.spec = spec;
  return set;
}

LatticeSpec sample_good_parameters(const PolygonalNorm& norm, int K, int N,
                                   const Rat& t_target, int max_tries,
                                   std::uint64_t seed, const Budgets& budgets) {
  if (max_tries < 1)
    throw Error(ErrorCode::Internal, "max_tries must be >= 1");
  if (sgn(t_target) < 0)
    throw Error(ErrorCode::Internal, "t_target must be >= 0");
  Rng rng(seed);
  const std::uint64_t grid = std::uint64_t(1) << 16;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    LatticeSpec spec;
    spec.K = K;
    spec.N = N;
    spec.seed = seed;
    spec.u.reserve(K);
    for (int k = 0; k < K; ++k) {
      Rat uk(Int(rng.range(grid, 2 * grid)), Int(grid));
      uk.canonicalize();
      spec.u.push_back(uk);
    }
    try {
      SeparatedSet set = build_lattice_set(norm, spec, budgets);
      // min_distance >= t * n^(-1/2), compared exactly as min^2 * n >= t^2.
      if (set.min_distance * set.min_distance * Rat(set.n) >=
          t_target * t_target)
        return spec;
    } catch (const ParameterCollision&) {
    } catch (const MembershipViolation&) {
    }
  }
  throw ExhaustedTries("no admissible scale vector within " +
                       std::to_string(max_tries) +
                       " draws (separation target " + rat_str(t_target) + ")");
}

SeparatedSet build_power_set(const PowerSpec& spec_in, const Budgets& budgets) {
  PowerSpec spec = spec_in;
  for (Rat& g : spec.gamma) g.canonicalize();
  if (spec.d < 1 || spec.L < 2 || spec.N < 2)
    throw Error(ErrorCode::InvalidNorm, "power build needs d >= 1, L >= 2, N >= 2");
  if (spec.gamma.size() != static_cast<std::size_t>(spec.d))
    throw Error(ErrorCode::InvalidNorm, "expected d slope parameters");

  // Exponent grid {0..L-1}^d, row-major with l_d fastest; capped at 64
  // entries inside power_grid.
  std::vector<Rat> powers = power_grid(spec.gamma, spec.L);
  const int E = static_cast<int>(powers.size());

  Int n_s0 = int_pow(spec.N, E);
  Int n = n_s0 * n_s0;
  if (cmp(n, budgets.points) > 0)
    throw BudgetExceeded("power set has " + n.get_str() + " points, budget is " +
                         std::to_string(budgets.points));

  std::vector<Rat> s0;
  s0.reserve(n_s0.get_ui());
  std::vector<int> j(E, 1);
  for (;;) {
    Rat value(0);
    for (int e = 0; e < E; ++e) {
      Rat coeff(j[e], spec.N);
      coeff.canonicalize();
      value += coeff * powers[e];
    }
    s0.push_back(value);
    int e = E - 1;
    while (e >= 0 && j[e] == spec.N) j[e--] = 1;
    if (e < 0) break;
    ++j[e];
  }
  std::sort(s0.begin(), s0.end());
  for (std::size_t i = 0; i + 1 < s0.size(); ++i)
    if (s0[i] == s0[i + 1])
      throw RepresentationCollision(
          "two exponent weightings give the value " + rat_str(s0[i]) +
          "; the slope vector fails finite-scale injectivity");

  Rat gammabar(0);
  for (const Rat& g : spec.gamma) gammabar = std::max(gammabar, abs_rat(g));
  gammabar += 1;
  const Rat sigma = Rat(1) / (Rat(4) * rat_pow(gammabar, static_cast<unsigned long>(spec.d * spec.L)));

  std::vector<Slope> slopes;
  slopes.reserve(spec.d + 3);
  for (const Rat& g : spec.gamma) slopes.push_back(Slope::from_rat(g));
  slopes.push_back(Slope(0, 1));
  slopes.push_back(Slope(1, 1));
  slopes.push_back(Slope::infinity());
  PolygonalNorm norm = from_slopes(slopes);

  SeparatedSet set;
  set.points.reserve(n.get_ui());
  for (const Rat& s1 : s0)
    for (const Rat& s2 : s0) set.points.push_back({sigma * s1, sigma * s2});
  check_membership(set.points);

  RatSet s0_set = RatSet::from_values(s0);
  RatSet diff = sumset(s0_set, s0_set.scaled(Rat(-1)), budgets.values);

  const int K = norm.K;
  set.n = n;
  set.norm = norm;
  set.proj_counts.resize(K);
  set.proj_values.resize(K);
  for (int k = 0; k < K; ++k) {
    RatSet proj = sumset(diff.scaled(norm.b[k].x1), diff.scaled(norm.b[k].x2),
                         budgets.values)
                      .scaled(sigma);
    set.proj_values[k] = std::move(proj);
    set.proj_counts[k] = set.proj_values[k].size();
  }
  set.min_distance = min_distance_exact(set.points, norm);
  set.scale_note = "A = (4 gammabar^(dL))^-1 S with gammabar = " +
                   rat_str(gammabar);
  set.spec = spec;
  return set;
}

CertificationReport certify(const SeparatedSet& set, const Rat& alpha,
                            const Rat& beta) {
  CertificationReport report;
  report.alpha = alpha;
  report.beta = beta;
  PowBracket na = pow_bracket(set.n, alpha, 64);
  report.constants.reserve(set.proj_counts.size());
  Rat c_max(0);
  for (std::uint64_t count : set.proj_counts) {
    FunctionalConstant fc;
    fc.count = count;
    fc.quotient_upper = Rat(Int(count)) / na.lower;
    fc.exact = na.exact;
    c_max = std::max(c_max, fc.quotient_upper);
    report.constants.push_back(std::move(fc));
  }
  report.c_max = c_max;
  PowBracket nb = pow_bracket(set.n, beta, 64);
  report.t_lower = set.min_distance * nb.lower;
  report.t_exact = nb.exact;
  return report;
}

}  // namespace polydist
