#include "polydist/distset.hpp"

#include <algorithm>

#include "polydist/errors.hpp"
#include "polydist/rng.hpp"

namespace polydist {

IntervalCover cover_distance_set(const CantorStage& stage,
                                 const PolygonalNorm& norm) {
  const Rat reach = Rat(2) * x_radius_bound(norm) * stage.radius;
  std::vector<CoverInterval> raw;
  for (const RatSet& proj : stage.proj_sets) {
    for (const Rat& v : proj.values()) {
      if (sgn(v) < 0) continue;  // difference sets are symmetric
      Rat lo = v - reach;
      if (sgn(lo) < 0) lo = 0;
      raw.push_back(CoverInterval{std::move(lo), v + reach});
    }
  }
  IntervalCover cover;
  cover.source_level = stage.j;
  cover.raw_interval_count = raw.size();
  std::sort(raw.begin(), raw.end(),
            [](const CoverInterval& a, const CoverInterval& b) {
              int c = cmp(a.lo, b.lo);
              return c != 0 ? c < 0 : a.hi < b.hi;
            });
  for (CoverInterval& iv : raw) {
    if (!cover.intervals.empty() && iv.lo <= cover.intervals.back().hi) {
      if (iv.hi > cover.intervals.back().hi)
        cover.intervals.back().hi = std::move(iv.hi);
    } else {
      cover.intervals.push_back(std::move(iv));
    }
  }
  cover.total_length = 0;
  for (const CoverInterval& iv : cover.intervals)
    cover.total_length += iv.hi - iv.lo;
  return cover;
}

bool cover_contains(const IntervalCover& cover, const Rat& value) {
  auto it = std::upper_bound(
      cover.intervals.begin(), cover.intervals.end(), value,
      [](const Rat& v, const CoverInterval& iv) { return v < iv.lo; });
  if (it == cover.intervals.begin()) return false;
  --it;
  return value <= it->hi;
}

DecayReport decay_report(const ConstructionSchedule& schedule,
                         const PolygonalNorm& norm, int depth,
                         const Budgets& budgets) {
  if (depth < 0 || static_cast<std::size_t>(depth) > schedule.levels.size())
    throw Error(ErrorCode::Internal,
                "cover depth " + std::to_string(depth) +
                    " does not fit a schedule with " +
                    std::to_string(schedule.levels.size()) + " levels");
  DecayReport report;
  report.contraction = schedule.c * schedule.c_bar;
  const Rat c0 = Rat(2) * x_radius_bound(norm);
  Rat bound = Rat(2 * schedule.K) * c0;
  CantorStage stage = stage_zero(schedule.K);
  for (int j = 0;; ++j) {
    IntervalCover cover = cover_distance_set(stage, norm);
    DecayLevel level;
    level.j = j;
    level.total_length = cover.total_length;
    level.bound = bound;
    level.intervals = cover.intervals.size();
    level.raw_intervals = cover.raw_interval_count;
    level.within_bound = cover.total_length <= bound;
    report.levels.push_back(std::move(level));
    if (j == depth) break;
    const ScheduleLevel& next = schedule.levels[static_cast<std::size_t>(j)];
    bound *= schedule.c_bar * next.pow_alpha_upper * next.delta_j;
    stage = iterate(stage, schedule, budgets);
  }
  return report;
}

std::vector<Rat> sample_distances(const CantorStage& stage,
                                  const PolygonalNorm& norm,
                                  std::uint64_t max_pairs,
                                  std::uint64_t seed) {
  if (!stage.materialized)
    throw NotMaterialized("stage " + std::to_string(stage.j) +
                          " has no explicit centers");
  const std::vector<Point2>& pts = stage.centers;
  const std::uint64_t n = pts.size();
  std::vector<Rat> out;
  if (n < 2) return out;
  const Int total = Int(static_cast<unsigned long>(n)) *
                    Int(static_cast<unsigned long>(n - 1)) / 2;
  if (cmp(total, static_cast<unsigned long>(max_pairs)) <= 0) {
    out.reserve(total.get_ui());
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i + 1; j < n; ++j)
        out.push_back(eval_norm(norm, pts[i] - pts[j]));
  } else {
    Rng rng(seed);
    out.reserve(max_pairs);
    for (std::uint64_t t = 0; t < max_pairs; ++t) {
      std::uint64_t i = rng.below(n);
      std::uint64_t j = rng.below(n - 1);
      if (j >= i) ++j;
      out.push_back(eval_norm(norm, pts[i] - pts[j]));
    }
  }
  return out;
}

}  // namespace polydist
