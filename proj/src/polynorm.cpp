#include "polydist/polynorm.hpp"

#include <algorithm>
#include <cstdlib>

namespace polydist {

namespace {

Slope slope_of_direction(const Rat& dx, const Rat& dy) {
  // dy/dx as a projective pair.
  return Slope(dy.get_num() * dx.get_den(), dx.get_num() * dy.get_den());
}

}  // namespace

void validate(const PolygonalNorm& norm) {
  if (norm.K < 2) throw DegenerateBall("need K >= 2 sides");
  if (norm.b.size() != static_cast<std::size_t>(norm.K) ||
      norm.a.size() != static_cast<std::size_t>(norm.K))
    throw DegenerateBall("K does not match the functional count");
  for (int k = 0; k < norm.K; ++k) {
    const Point2& bk = norm.b[k];
    const Point2& ak = norm.a[k];
    if (bk.x1 == 0 && bk.x2 == 0) throw DegenerateBall("zero functional");
    if (ak.x1 == 0 && ak.x2 == 0) throw DegenerateBall("zero side direction");
    if (dot(ak, bk) != 0)
      throw DegenerateBall("side direction not orthogonal to its functional");
    if (std::max(abs_rat(ak.x1), abs_rat(ak.x2)) != 1)
      throw DegenerateBall("side direction not canonically scaled");
  }
  for (int k = 0; k < norm.K; ++k)
    for (int l = k + 1; l < norm.K; ++l)
      if (cross(norm.b[k], norm.b[l]) == 0)
        throw DuplicateSlope("parallel functionals at indices " +
                             std::to_string(k) + " and " + std::to_string(l));
  // Two non-parallel symmetric slabs already bound the intersection, so with
  // the pairwise check above the ball is bounded whenever K >= 2.
}

Rat eval_norm(const PolygonalNorm& norm, const Point2& x) {
  Rat best(0);
  for (const Point2& bk : norm.b) {
    Rat v = abs_rat(dot(x, bk));
    if (v > best) best = v;
  }
  return best;
}

PolygonalNorm from_slopes(const std::vector<Slope>& slopes) {
  for (std::size_t i = 0; i < slopes.size(); ++i)
    for (std::size_t j = i + 1; j < slopes.size(); ++j)
      if (slopes[i] == slopes[j])
        throw DuplicateSlope("slope " + slope_str(slopes[i]) + " repeats");
  PolygonalNorm norm;
  norm.K = static_cast<int>(slopes.size());
  norm.b.reserve(slopes.size());
  norm.a.reserve(slopes.size());
  for (const Slope& s : slopes) {
    if (s.is_infinite())
      norm.b.push_back({Rat(1), Rat(0)});
    else
      norm.b.push_back({Rat(-s.p), Rat(s.q)});
    Rat m = std::max(abs_rat(Rat(s.q)), abs_rat(Rat(s.p)));
    Rat a1(s.q), a2(s.p);
    norm.a.push_back({a1 / m, a2 / m});
  }
  validate(norm);
  return norm;
}

std::vector<Slope> slopes_of(const PolygonalNorm& norm) {
  std::vector<Slope> out;
  out.reserve(norm.a.size());
  for (const Point2& ak : norm.a) out.push_back(slope_of_direction(ak.x1, ak.x2));
  return out;
}

std::vector<Slope> normalize_slopes(const std::vector<Slope>& slopes,
                                    std::size_t i1, std::size_t i2,
                                    std::size_t i3) {
  const std::size_t K = slopes.size();
  if (i1 >= K || i2 >= K || i3 >= K)
    throw IndexOutOfRange("normalization index exceeds the slope count");
  if (i1 == i2 || i1 == i3 || i2 == i3)
    throw IndexOutOfRange("normalization indices must be distinct");
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j)
      if (slopes[i] == slopes[j])
        throw DuplicateSlope("slope " + slope_str(slopes[i]) + " repeats");

  const Point2 v1 = slopes[i1].direction();
  const Point2 v2 = slopes[i2].direction();
  const Point2 v3 = slopes[i3].direction();
  // M = diag(1/alpha, 1/beta) * [v1 v3]^-1 maps v1 -> e1 (slope 0),
  // v3 -> e2 (slope infinity), v2 -> (1, 1) (slope 1), where
  // (alpha, beta) are the coordinates of v2 in the basis (v1, v3).
  Rat det = cross(v1, v3);
  Rat alpha = cross(v2, v3) / det;
  Rat beta = cross(v1, v2) / det;
  Rat r1x = v3.x2 / (alpha * det), r1y = -v3.x1 / (alpha * det);
  Rat r2x = -v1.x2 / (beta * det), r2y = v1.x1 / (beta * det);

  std::vector<Slope> out;
  out.reserve(K);
  for (const Slope& s : slopes) {
    Point2 w = s.direction();
    Rat wx = r1x * w.x1 + r1y * w.x2;
    Rat wy = r2x * w.x1 + r2y * w.x2;
    out.push_back(slope_of_direction(wx, wy));
  }
  return out;
}

Rat x_radius_bound(const PolygonalNorm& norm) {
  Rat max_sq(0);
  for (const Point2& bk : norm.b) max_sq = std::max(max_sq, euclid_sq(bk));
  return rat_sqrt_upper(max_sq, 32);
}

Rat circumradius_sq(const PolygonalNorm& norm) {
  Rat best(0);
  const int K = norm.K;
  for (int k = 0; k < K; ++k) {
    for (int l = k + 1; l < K; ++l) {
      Rat det = cross(norm.b[k], norm.b[l]);
      for (int s1 = -1; s1 <= 1; s1 += 2) {
        for (int s2 = -1; s2 <= 1; s2 += 2) {
          // Solve x . b_k = s1, x . b_l = s2.
          Point2 x{(Rat(s1) * norm.b[l].x2 - Rat(s2) * norm.b[k].x2) / det,
                   (Rat(s2) * norm.b[k].x1 - Rat(s1) * norm.b[l].x1) / det};
          bool inside = true;
          for (int m = 0; m < K && inside; ++m)
            if (abs_rat(dot(x, norm.b[m])) > 1) inside = false;
          if (inside) best = std::max(best, euclid_sq(x));
        }
      }
    }
  }
  return best;
}

}  // namespace polydist
