#ifndef POLYDIST_CANTOR_HPP
#define POLYDIST_CANTOR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polydist/budgets.hpp"
#include "polydist/sepset.hpp"

namespace polydist {

enum class ScheduleMode { theorem1, theorem4 };

// Per-level data: generator set, exponents, and the exact (or certified
// 64-fractional-bit lower) disc radius factors.
struct ScheduleLevel {
  std::shared_ptr<const SeparatedSet> gen;
  Int n_j;
  Rat s_j;          // radius exponent: (K-1)/K, or 1/2 + 2 eps_j
  Rat alpha_j;      // projection-count exponent used by certify
  Rat beta_j;       // separation exponent used by certify
  Rat eps_j;        // theorem4 only
  bool has_eps = false;
  Rat delta_unit;   // certified n_j^(-s_j); rounded down when irrational
  bool delta_exact = true;
  Rat delta_j;      // c * delta_unit
  Rat pow_alpha_upper;  // certified upper bound of n_j^(alpha_j)
  Rat c_level;      // max_k certified count quotient at this level
  Int n_cum;        // N_j = prod n_nu
  Rat delta_cum;    // Delta_j = prod delta_nu
};

struct ConstructionSchedule {
  ScheduleMode mode = ScheduleMode::theorem1;
  int K = 0;
  Rat c;
  Rat c_upper;  // C: max over levels of the certified count quotient
  Rat c_bar;    // smallest upper bound of C with denominator 2^16
  std::vector<ScheduleLevel> levels;
};

// Validates and completes a schedule over the given generator sets. If c is
// absent it is set to min(1/(4 C_bar), largest grid rational keeping every
// level's discs disjoint). Throws ScheduleInfeasible when no admissible c
// exists (or the supplied one violates c C_bar < 1/2, disjointness
// 2 delta_j < min_distance(A_j), or radius containment c < 1/2), and
// NonMonotone when the n_j decrease. eps_overrides supplies theorem4
// eps_j values (default eps_j = 1/(j+2)).
ConstructionSchedule make_schedule(ScheduleMode mode, int K,
                                   std::vector<std::shared_ptr<const SeparatedSet>> gens,
                                   const std::optional<Rat>& c = std::nullopt,
                                   const std::vector<Rat>& eps_overrides = {});

// Level-j state: disc centers (when materialized), disc radius Delta_j, and
// the exact per-functional projection value sets of the center differences,
// maintained by sumset recursion so they exist even when centers are not
// materialized.
struct CantorStage {
  int j = 0;
  Int counts;  // N_j
  Rat radius;  // Delta_j
  bool materialized = true;
  std::vector<Point2> centers;
  std::vector<RatSet> proj_sets;
  std::shared_ptr<const CantorStage> parent;
};

// The level-0 convention: one disc B(0, 1), projection sets {0}.
CantorStage stage_zero(int K);

// Stage with j = 1: centers are the first generator's points, radius
// delta_1, projection sets copied from the generator.
CantorStage initial_stage(const ConstructionSchedule& schedule,
                          const Budgets& budgets = {});

// Replaces every disc by a scaled copy of the next generator's disc union:
// centers' = { y + Delta_j x }, proj' = proj (+) Delta_j * gen_proj, counts
// multiply, radius shrinks to Delta_{j+1}. Centers are materialized only
// while the parent is materialized and the child count fits the centers
// budget; the projection recursion always runs (BudgetExceeded when its
// value budget is exceeded).
CantorStage iterate(const CantorStage& stage,
                    const ConstructionSchedule& schedule,
                    const Budgets& budgets = {});

// Mass of one level-j disc under the natural measure: 1 / N_j.
Rat natural_measure(const CantorStage& stage, const Int& disc_index);

struct DimensionEstimate {
  int j = 0;
  double estimate = 0.0;
  std::string estimate_str;  // 24 significant digits from 128-bit arithmetic
};

// est_j = log(N_j) / log(1 / Delta_j) per level.
std::vector<DimensionEstimate> dimension_estimates(
    const ConstructionSchedule& schedule);

// The dimension the construction trends toward: K/(K-1) in theorem1 mode,
// 2 in theorem4 mode.
Rat dimension_target(const ConstructionSchedule& schedule);

}  // namespace polydist

#endif
