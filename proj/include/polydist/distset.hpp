#ifndef POLYDIST_DISTSET_HPP
#define POLYDIST_DISTSET_HPP

#include <cstdint>
#include <vector>

#include "polydist/budgets.hpp"
#include "polydist/cantor.hpp"
#include "polydist/polynorm.hpp"
#include "polydist/rational.hpp"

namespace polydist {

struct CoverInterval {
  Rat lo;
  Rat hi;
};

// Disjoint sorted intervals covering the distance set of a stage.
struct IntervalCover {
  std::vector<CoverInterval> intervals;
  Rat total_length;
  int source_level = 0;
  std::size_t raw_interval_count = 0;
};

IntervalCover cover_distance_set(const CantorStage& stage,
                                 const PolygonalNorm& norm);

bool cover_contains(const IntervalCover& cover, const Rat& value);

struct DecayLevel {
  int j = 0;
  Rat total_length;
  Rat bound;
  std::size_t intervals = 0;
  std::size_t raw_intervals = 0;
  bool within_bound = false;
};

struct DecayReport {
  std::vector<DecayLevel> levels;
  Rat contraction;  // c * C, the certified per-level decay factor
};

DecayReport decay_report(const ConstructionSchedule& schedule,
                         const PolygonalNorm& norm, int depth,
                         const Budgets& budgets = {});

// Exact norm distances between stage centers: every unordered pair when there
// are at most max_pairs of them, otherwise a seeded sample of that many.
std::vector<Rat> sample_distances(const CantorStage& stage,
                                  const PolygonalNorm& norm,
                                  std::uint64_t max_pairs, std::uint64_t seed);

}  // namespace polydist

#endif
