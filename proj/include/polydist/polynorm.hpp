#ifndef POLYDIST_POLYNORM_HPP
#define POLYDIST_POLYNORM_HPP

#include <cstddef>
#include <vector>

#include "polydist/geometry.hpp"

namespace polydist {

// Norm whose unit ball is the symmetric convex 2K-gon
// {x : |x . b_k| <= 1 for all k}. a_k is the side direction paired with
// b_k (a_k . b_k = 0), stored with max(|a_k1|, |a_k2|) = 1.
struct PolygonalNorm {
  int K = 0;
  std::vector<Point2> b;
  std::vector<Point2> a;
};

// Throws DuplicateSlope / DegenerateBall if the invariants fail.
void validate(const PolygonalNorm& norm);

// max_k |x . b_k|, exact.
Rat eval_norm(const PolygonalNorm& norm, const Point2& x);

// Builds the norm with b_k = (-p, q) and a_k = (q, p) (canonically scaled)
// for slope p/q; slope infinity gives b = (1, 0), a = (0, 1).
PolygonalNorm from_slopes(const std::vector<Slope>& slopes);

// Side slopes read back from the a_k, in order.
std::vector<Slope> slopes_of(const PolygonalNorm& norm);

// Applies the coordinate change sending slopes[i1] -> 0, slopes[i2] -> 1,
// slopes[i3] -> infinity, and returns all transformed slopes. Pairwise
// projective cross-ratios are preserved.
std::vector<Slope> normalize_slopes(const std::vector<Slope>& slopes,
                                    std::size_t i1, std::size_t i2,
                                    std::size_t i3);

// Certified rational r with max_k |b_k|_2 <= r <= max_k |b_k|_2 * (1 + 2^-32).
// The X-diameter constant of the Euclidean unit disc is then 2r.
Rat x_radius_bound(const PolygonalNorm& norm);

// Exact squared Euclidean circumradius of the unit ball (max |v|^2 over the
// polygon's vertices).
Rat circumradius_sq(const PolygonalNorm& norm);

}  // namespace polydist

#endif
