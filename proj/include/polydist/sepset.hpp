#ifndef POLYDIST_SEPSET_HPP
#define POLYDIST_SEPSET_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "polydist/budgets.hpp"
#include "polydist/polynorm.hpp"
#include "polydist/ratset.hpp"

namespace polydist {

struct LatticeSpec {
  int K = 0;
  int N = 0;
  std::vector<Rat> u;  // K scale parameters in [1, 2]
  std::uint64_t seed = 0;  // recorded for reproducibility
};

struct PowerSpec {
  int d = 0;
  int L = 0;
  int N = 0;
  std::vector<Rat> gamma;
};

using SetSpec = std::variant<LatticeSpec, PowerSpec>;

// A finite point set with certified metadata: exact cardinality, exact
// per-functional projection value sets of A - A, and exact minimum pairwise
// X-distance. Points are lexicographically sorted.
struct SeparatedSet {
  std::vector<Point2> points;
  Int n;
  PolygonalNorm norm;
  std::vector<std::uint64_t> proj_counts;
  std::vector<RatSet> proj_values;  // (A - A) . b_k, full exact value sets
  Rat min_distance;
  std::string scale_note;
  SetSpec spec;
};

// Enumerates S = { sum_k (j_k / N) u_k a_k : j in {1..N}^K } and returns
// A = (4K)^-1 S with certified metadata. Throws ParameterCollision when
// |S| < N^K, MembershipViolation when a point leaves B(0, 1/2), and
// BudgetExceeded on budget violations.
SeparatedSet build_lattice_set(const PolygonalNorm& norm,
                               const LatticeSpec& spec,
                               const Budgets& budgets = {});

// Draws u from the grid { q / 2^16 : q in [2^16, 2^17] }^K with a seeded
// generator until the built set is collision-free and certifies
// min_distance >= t_target * n^(-1/2). Throws ExhaustedTries.
LatticeSpec sample_good_parameters(const PolygonalNorm& norm, int K, int N,
                                   const Rat& t_target, int max_tries,
                                   std::uint64_t seed,
                                   const Budgets& budgets = {});

// Builds S_0 = { sum_{l in {0..L-1}^d} (j_l / N) gamma^l }, S = S_0 x S_0,
// A = (4 gammabar^(dL))^-1 S with gammabar = max_k |gamma_k| + 1, under the
// norm from_slopes(gamma_1, .., gamma_d, 0, 1, inf). Throws
// RepresentationCollision when |S_0| < N^(L^d).
SeparatedSet build_power_set(const PowerSpec& spec, const Budgets& budgets = {});

// Exact minimum pairwise X-distance. Uses all-pairs evaluation up to
// brute_threshold points, then grid bucketing at cell width
// (circumradius upper bound) * (lexicographic-neighbor distance bound).
Rat min_distance_exact(const std::vector<Point2>& points,
                       const PolygonalNorm& norm,
                       std::size_t brute_threshold = 1024);

struct FunctionalConstant {
  std::uint64_t count = 0;  // projection count for this functional
  Rat quotient_upper;       // certified upper bound of count / n^alpha
  bool exact = false;       // quotient_upper is exact
};

// Implied-constant report: C_k = proj_counts[k] / n^alpha (certified upper
// bounds, exact when n^alpha is rational) and the separation constant
// t = min_distance * n^beta (certified lower bound).
struct CertificationReport {
  Rat alpha;
  Rat beta;
  std::vector<FunctionalConstant> constants;
  Rat c_max;     // max_k quotient_upper
  Rat t_lower;   // certified lower bound of min_distance * n^beta
  bool t_exact = false;
};

CertificationReport certify(const SeparatedSet& set, const Rat& alpha,
                            const Rat& beta);

}  // namespace polydist

#endif
