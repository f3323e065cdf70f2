#include "polydist/cantor.hpp"

#include <mpfr.h>

#include <algorithm>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

// Largest multiple of 2^-16 strictly below v.
Rat grid_strictly_below(const Rat& v) {
  Int scaled = v.get_num() << 16;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  if (k * v.get_den() == scaled) k -= 1;
  Rat r(k, Int(1) << 16);
  r.canonicalize();
  return r;
}

}  // namespace

ConstructionSchedule make_schedule(ScheduleMode mode, int K,
                                   std::vector<std::shared_ptr<const SeparatedSet>> gens,
                                   const std::optional<Rat>& c,
                                   const std::vector<Rat>& eps_overrides) {
  if (gens.empty())
    throw ScheduleInfeasible("a schedule needs at least one generator level");
  ConstructionSchedule schedule;
  schedule.mode = mode;
  schedule.K = K;
  schedule.levels.reserve(gens.size());

  Rat c_upper(0);
  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    const int level_no = static_cast<int>(idx) + 1;
    if (!gens[idx])
      throw Error(ErrorCode::Internal, "missing generator set");
    const SeparatedSet& gen = *gens[idx];
    if (gen.norm.K != K)
      throw Error(ErrorCode::InvalidNorm,
                  "generator norm has K=" + std::to_string(gen.norm.K) +
                      " but the schedule says " + std::to_string(K));
    ScheduleLevel level;
    level.gen = gens[idx];
    level.n_j = gen.n;
    if (idx > 0 && level.n_j < schedule.levels.back().n_j)
      throw NonMonotone("generator cardinalities must be nondecreasing");
    if (mode == ScheduleMode::theorem1) {
      level.s_j = Rat(K - 1, K);
      level.alpha_j = level.s_j;
      level.beta_j = Rat(1, 2);
    } else {
      Rat eps = idx < eps_overrides.size() ? eps_overrides[idx]
                                           : Rat(1, level_no + 2);
      eps.canonicalize();
      if (sgn(eps) <= 0)
        throw ScheduleInfeasible("eps_j must be positive");
      level.eps_j = eps;
      level.has_eps = true;
      level.s_j = Rat(1, 2) + Rat(2) * eps;
      level.alpha_j = Rat(1, 2) + eps;
      level.beta_j = level.alpha_j;
    }
    PowBracket ps = pow_bracket(level.n_j, level.s_j, 64);
    level.delta_unit = Rat(1) / ps.upper;  // lower bound of n_j^(-s_j)
    level.delta_exact = ps.exact;
    level.pow_alpha_upper = pow_bracket(level.n_j, level.alpha_j, 64).upper;
    CertificationReport report = certify(gen, level.alpha_j, level.beta_j);
    level.c_level = report.c_max;
    c_upper = std::max(c_upper, level.c_level);
    schedule.levels.push_back(std::move(level));
  }
  schedule.c_upper = c_upper;
  schedule.c_bar = grid_ceil(c_upper, 16);

  // Tightest disjointness requirement over levels: c < min_distance(A_j) /
  // (2 n_j^(-s_j)) for every j.
  Rat disjoint_sup;
  bool have_sup = false;
  for (const ScheduleLevel& level : schedule.levels) {
    Rat q = level.gen->min_distance / (Rat(2) * level.delta_unit);
    if (!have_sup || q < disjoint_sup) {
      disjoint_sup = q;
      have_sup = true;
    }
  }

  if (c.has_value()) {
    schedule.c = *c;
    schedule.c.canonicalize();
    if (sgn(schedule.c) <= 0 || schedule.c >= 1)
      throw ScheduleInfeasible("c must lie in (0, 1)");
    if (!(schedule.c * schedule.c_bar < Rat(1, 2)))
      throw ScheduleInfeasible(
          "c * C = " + rat_str(schedule.c * schedule.c_bar) +
          " violates the decay condition c * C < 1/2");
    if (!(schedule.c < Rat(1, 2)))
      throw ScheduleInfeasible("radius containment needs c < 1/2");
    if (!(schedule.c < disjoint_sup))
      throw ScheduleInfeasible(
          "c = " + rat_str(schedule.c) + " makes level discs overlap (need c < " +
          rat_str(disjoint_sup) + ")");
  } else {
    Rat by_decay = Rat(1, 4) / schedule.c_bar;
    Rat by_disjoint = grid_strictly_below(disjoint_sup);
    schedule.c = std::min(std::min(by_decay, by_disjoint), Rat(1, 4));
    if (sgn(schedule.c) <= 0)
      throw ScheduleInfeasible(
          "no positive c keeps the level discs disjoint (separation floor " +
          rat_str(disjoint_sup) + " is below the parameter grid)");
  }

  Int n_cum(1);
  Rat delta_cum(1);
  for (ScheduleLevel& level : schedule.levels) {
    level.delta_j = schedule.c * level.delta_unit;
    if (!(Rat(2) * level.delta_j < level.gen->min_distance))
      throw ScheduleInfeasible("discs of radius delta_j = " +
                               rat_str(level.delta_j) +
                               " overlap at separation " +
                               rat_str(level.gen->min_distance));
    n_cum *= level.n_j;
    delta_cum *= level.delta_j;
    level.n_cum = n_cum;
    level.delta_cum = delta_cum;
  }
  return schedule;
}

CantorStage stage_zero(int K) {
  if (K < 2) throw Error(ErrorCode::Internal, "stage zero needs K >= 2");
  CantorStage stage;
  stage.j = 0;
  stage.counts = 1;
  stage.radius = 1;
  stage.materialized = true;
  stage.centers = {Point2{Rat(0), Rat(0)}};
  stage.proj_sets.assign(K, RatSet::singleton(Rat(0)));
  return stage;
}

CantorStage initial_stage(const ConstructionSchedule& schedule,
                          const Budgets& budgets) {
  return iterate(stage_zero(schedule.K), schedule, budgets);
}

CantorStage iterate(const CantorStage& stage,
                    const ConstructionSchedule& schedule,
                    const Budgets& budgets) {
  const std::size_t idx = static_cast<std::size_t>(stage.j);
  if (idx >= schedule.levels.size())
    throw Error(ErrorCode::Internal,
                "the schedule has no level " + std::to_string(stage.j + 1));
  const ScheduleLevel& level = schedule.levels[idx];
  const SeparatedSet& gen = *level.gen;

  CantorStage next;
  next.j = stage.j + 1;
  next.counts = stage.counts * level.n_j;
  next.radius = stage.radius * level.delta_j;
  next.proj_sets.reserve(stage.proj_sets.size());
  for (std::size_t k = 0; k < stage.proj_sets.size(); ++k)
    next.proj_sets.push_back(sumset(stage.proj_sets[k],
                                    gen.proj_values[k].scaled(stage.radius),
                                    budgets.values));
  if (stage.materialized && cmp(next.counts, budgets.centers) <= 0) {
    next.materialized = true;
    next.centers.reserve(next.counts.get_ui());
    for (const Point2& y : stage.centers)
      for (const Point2& x : gen.points)
        next.centers.push_back(y + stage.radius * x);
    std::sort(next.centers.begin(), next.centers.end(), lex_less);
  } else {
    next.materialized = false;
  }
  return next;
}

Rat natural_measure(const CantorStage& stage, const Int& disc_index) {
  if (disc_index < 0 || disc_index >= stage.counts)
    throw IndexOutOfRange("disc index " + disc_index.get_str() +
                          " outside [0, " + stage.counts.get_str() + ")");
  Rat mass(Int(1), stage.counts);
  mass.canonicalize();
  return mass;
}

std::vector<DimensionEstimate> dimension_estimates(
    const ConstructionSchedule& schedule) {
  std::vector<DimensionEstimate> out;
  out.reserve(schedule.levels.size());
  mpfr_t num, den;
  mpfr_init2(num, 128);
  mpfr_init2(den, 128);
  for (std::size_t idx = 0; idx < schedule.levels.size(); ++idx) {
    const ScheduleLevel& level = schedule.levels[idx];
    mpfr_set_z(num, level.n_cum.get_mpz_t(), MPFR_RNDN);
    mpfr_log(num, num, MPFR_RNDN);
    mpfr_set_q(den, level.delta_cum.get_mpq_t(), MPFR_RNDN);
    mpfr_log(den, den, MPFR_RNDN);
    mpfr_neg(den, den, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);
    DimensionEstimate est;
    est.j = static_cast<int>(idx) + 1;
    est.estimate = mpfr_get_d(num, MPFR_RNDN);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.24Rg", num);
    est.estimate_str = buf;
    out.push_back(std::move(est));
  }
  mpfr_clear(num);
  mpfr_clear(den);
  return out;
}

Rat dimension_target(const ConstructionSchedule& schedule) {
  if (schedule.mode == ScheduleMode::theorem1)
    return Rat(schedule.K, schedule.K - 1);
  return Rat(2);
}

}  // namespace polydist
