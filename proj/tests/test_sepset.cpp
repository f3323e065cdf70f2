#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "polydist/errors.hpp"
#include "polydist/sepset.hpp"

using namespace polydist;

namespace {

std::vector<Slope> slopes_of_strings(const std::vector<std::string>& ss) {
  std::vector<Slope> out;
  for (const std::string& s : ss) out.push_back(parse_slope(s));
  return out;
}

// All-pairs reference for the minimum X-distance.
Rat brute_min_distance(const std::vector<Point2>& pts,
                       const PolygonalNorm& norm) {
  Rat best;
  bool have = false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rat d = eval_norm(norm, pts[i] - pts[j]);
      if (!have || d < best) {
        best = d;
        have = true;
      }
    }
  return best;
}

// All-pairs reference for one projection value set of A - A.
RatSet brute_projection(const std::vector<Point2>& pts, const Point2& bk) {
  std::vector<Rat> vals;
  for (const Point2& p : pts)
    for (const Point2& q : pts) vals.push_back(dot(p - q, bk));
  return RatSet::from_values(vals);
}

SeparatedSet square_demo(int N = 2) {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf"}));
  LatticeSpec spec;
  spec.K = 2;
  spec.N = N;
  spec.u = {Rat(1), Rat(1)};
  return build_lattice_set(norm, spec);
}

SeparatedSet reference_k4_set() {
  PolygonalNorm norm =
      from_slopes(slopes_of_strings({"0", "inf", "4/3", "-4/3"}));
  LatticeSpec spec;
  spec.K = 4;
  spec.N = 2;
  spec.u = {Rat(1), Rat(4, 3), Rat(2), Rat(2)};
  return build_lattice_set(norm, spec);
}

}  // namespace

TEST_CASE("square-norm demo set matches the hand enumeration") {
  SeparatedSet set = square_demo();
  CHECK(set.n == 4);
  REQUIRE(set.points.size() == 4);
  // A = (1/8) { (j_1/2, j_2/2) : j in {1,2}^2 }
  std::set<std::pair<std::string, std::string>> got, want;
  for (const Point2& p : set.points)
    got.insert({rat_str(p.x1), rat_str(p.x2)});
  for (int j1 = 1; j1 <= 2; ++j1)
    for (int j2 = 1; j2 <= 2; ++j2) {
      Rat x(j1, 16), y(j2, 16);
      x.canonicalize();
      y.canonicalize();
      want.insert({rat_str(x), rat_str(y)});
    }
  CHECK(got == want);
  CHECK(set.proj_counts == std::vector<std::uint64_t>{3, 3});
  CHECK(set.min_distance == Rat(1, 16));
  CHECK(set.min_distance == brute_min_distance(set.points, set.norm));
}

TEST_CASE("lattice projection sets equal the brute-force difference sets") {
  SeparatedSet set = square_demo(3);
  CHECK(set.n == 9);
  for (int k = 0; k < set.norm.K; ++k) {
    RatSet brute = brute_projection(set.points, set.norm.b[k]);
    CHECK(set.proj_values[k] == brute);
    CHECK(set.proj_counts[k] == brute.size());
    CHECK(set.proj_values[k].is_symmetric());
  }
}

TEST_CASE("reference four-functional set: every certified fact re-checked") {
  SeparatedSet set = reference_k4_set();
  CHECK(set.n == 16);
  CHECK(set.points.size() == 16);

  // Distinctness and membership in the Euclidean ball of radius 1/2.
  std::set<std::pair<std::string, std::string>> uniq;
  for (const Point2& p : set.points) {
    uniq.insert({rat_str(p.x1), rat_str(p.x2)});
    CHECK(euclid_sq(p) <= Rat(1, 4));
  }
  CHECK(uniq.size() == 16);

  CHECK(set.proj_counts == std::vector<std::uint64_t>{15, 15, 11, 11});
  for (int k = 0; k < 4; ++k)
    CHECK(set.proj_values[k] == brute_projection(set.points, set.norm.b[k]));

  CHECK(set.min_distance == Rat(1, 8));
  CHECK(set.min_distance == brute_min_distance(set.points, set.norm));
}

TEST_CASE("certification of the reference set is exact") {
  SeparatedSet set = reference_k4_set();
  CertificationReport cert = certify(set, Rat(3, 4), Rat(1, 2));
  REQUIRE(cert.constants.size() == 4);
  // n^(3/4) = 8 and n^(1/2) = 4 exactly for n = 16.
  CHECK(cert.constants[0].quotient_upper == Rat(15, 8));
  CHECK(cert.constants[0].exact);
  CHECK(cert.constants[2].quotient_upper == Rat(11, 8));
  CHECK(cert.c_max == Rat(15, 8));
  CHECK(cert.t_lower == Rat(1, 2));
  CHECK(cert.t_exact);
}

TEST_CASE("certification brackets irrational powers from the safe side") {
  SeparatedSet set = square_demo();  // n = 4
  CertificationReport cert = certify(set, Rat(1, 3), Rat(1, 3));
  // 4^(1/3) is irrational: quotient_upper >= count / 4^(1/3) without
  // exactness, t_lower <= min_distance * 4^(1/3).
  CHECK_FALSE(cert.constants[0].exact);
  CHECK_FALSE(cert.t_exact);
  Rat q = cert.constants[0].quotient_upper;
  CHECK(rat_pow(Rat(3) / q, 3) <= 4);  // (count/q)^3 <= n at count = 3
  CHECK(rat_pow(cert.t_lower / set.min_distance, 3) <= 4);
}

TEST_CASE("colliding scale parameters are rejected") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf", "1"}));
  LatticeSpec spec;
  spec.K = 3;
  spec.N = 2;
  spec.u = {Rat(3, 2), Rat(3, 2), Rat(3, 2)};
  CHECK_THROWS_AS(build_lattice_set(norm, spec), ParameterCollision);
}

TEST_CASE("points leaving the half ball are rejected") {
  // Two nearly parallel sides push S almost along one direction: the
  // extreme point of A = S/8 is (199/400, 1/2), outside |x| <= 1/2.
  PolygonalNorm norm = from_slopes(slopes_of_strings({"1", "100/99"}));
  LatticeSpec spec;
  spec.K = 2;
  spec.N = 2;
  spec.u = {Rat(2), Rat(2)};
  CHECK_THROWS_AS(build_lattice_set(norm, spec), MembershipViolation);
}

TEST_CASE("scale parameters outside the unit-to-double range are rejected") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf"}));
  LatticeSpec spec;
  spec.K = 2;
  spec.N = 2;
  spec.u = {Rat(4), Rat(4)};
  CHECK_THROWS_AS(build_lattice_set(norm, spec), Error);
}

TEST_CASE("the point budget caps lattice enumeration") {
  PolygonalNorm norm =
      from_slopes(slopes_of_strings({"0", "inf", "4/3", "-4/3"}));
  LatticeSpec spec;
  spec.K = 4;
  spec.N = 2;
  spec.u = {Rat(1), Rat(4, 3), Rat(2), Rat(2)};
  Budgets budgets;
  budgets.points = 8;
  CHECK_THROWS_AS(build_lattice_set(norm, spec, budgets), BudgetExceeded);
}

TEST_CASE("power set for base 13/8 matches the hand enumeration") {
  PowerSpec spec;
  spec.d = 1;
  spec.L = 2;
  spec.N = 2;
  spec.gamma = {Rat(13, 8)};
  SeparatedSet set = build_power_set(spec);
  CHECK(set.n == 16);

  // S_0 = { j_0/2 + (j_1/2)(13/8) } = {21, 29, 34, 42}/16, scaled by
  // sigma = 1 / (4 * (21/8)^2) = 16/441.
  const std::vector<Rat> base = {Rat(21, 16), Rat(29, 16), Rat(17, 8),
                                 Rat(21, 8)};
  const Rat sigma(16, 441);
  std::set<std::pair<std::string, std::string>> got, want;
  for (const Point2& p : set.points)
    got.insert({rat_str(p.x1), rat_str(p.x2)});
  for (const Rat& x : base)
    for (const Rat& y : base)
      want.insert({rat_str(Rat(sigma * x)), rat_str(Rat(sigma * y))});
  CHECK(got == want);

  CHECK(set.norm.K == 4);
  CHECK(set.norm.b[0] == Point2{Rat(-13), Rat(8)});
  CHECK(set.min_distance == Rat(8, 441));
  CHECK(set.min_distance == brute_min_distance(set.points, set.norm));
  for (int k = 0; k < set.norm.K; ++k) {
    CHECK(set.proj_values[k] == brute_projection(set.points, set.norm.b[k]));
    CHECK(set.proj_counts[k] == set.proj_values[k].size());
  }
  // Axis projections see D = S_0 - S_0 with 9 values.
  CHECK(set.proj_counts[1] == 9);
  CHECK(set.proj_counts[3] == 9);
}

TEST_CASE("power digits colliding on a resonant base are rejected") {
  PowerSpec spec;
  spec.d = 1;
  spec.L = 2;
  spec.N = 3;
  spec.gamma = {Rat(1, 2)};
  CHECK_THROWS_AS(build_power_set(spec), RepresentationCollision);
}

TEST_CASE("min_distance_exact agrees with brute force through the grid path") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf", "1"}));
  std::vector<Point2> pts;
  // Deterministic scattered cloud: i^2 mod 101 is injective for i < 50, so
  // the x coordinates are pairwise distinct. One extra point sits 1/100000
  // to the right of the i = 1 point.
  for (int i = 0; i < 40; ++i)
    pts.push_back(Point2{Rat(i * i % 101, 97), Rat((7 * i + 3) % 19, 89)});
  pts.push_back(Point2{Rat(1, 97) + Rat(1, 100000), Rat(10, 89)});
  Rat brute = min_distance_exact(pts, norm, 1 << 20);
  Rat grid = min_distance_exact(pts, norm, 2);
  CHECK(brute == grid);
  CHECK(brute == Rat(1, 100000));
  CHECK(brute == brute_min_distance(pts, norm));
}

TEST_CASE("min_distance_exact reports zero for duplicate points") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf"}));
  std::vector<Point2> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(Point2{Rat(i, 5), Rat(0)});
  pts.push_back(Point2{Rat(2, 5), Rat(0)});
  CHECK(min_distance_exact(pts, norm, 2) == Rat(0));
  CHECK(min_distance_exact(pts, norm, 1 << 20) == Rat(0));
}

TEST_CASE("min_distance_exact handles collinear and axis-aligned clouds") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf"}));
  std::vector<Point2> pts;
  for (int i = 0; i < 12; ++i) pts.push_back(Point2{Rat(i, 7), Rat(0)});
  CHECK(min_distance_exact(pts, norm, 2) == Rat(1, 7));
  pts.push_back(Point2{Rat(3, 7), Rat(1, 50)});
  CHECK(min_distance_exact(pts, norm, 2) == Rat(1, 50));
}

TEST_CASE("sample_good_parameters is deterministic and certifies the target") {
  PolygonalNorm norm =
      from_slopes(slopes_of_strings({"0", "inf", "1", "-1"}));
  LatticeSpec a = sample_good_parameters(norm, 4, 3, Rat(1, 100), 100, 7);
  LatticeSpec b = sample_good_parameters(norm, 4, 3, Rat(1, 100), 100, 7);
  CHECK(a.u == b.u);
  CHECK(a.seed == 7);
  for (const Rat& uk : a.u) {
    CHECK(uk >= 1);
    CHECK(uk <= 2);
    CHECK(Rat(uk * 65536).get_den() == 1);  // drawn from the 2^-16 grid
  }
  SeparatedSet set = build_lattice_set(norm, a);
  CHECK(set.n == 81);
  // Acceptance rule: min_distance^2 * n >= t^2.
  CHECK(set.min_distance * set.min_distance * set.n >= Rat(1, 10000));
}

TEST_CASE("sampling gives up after max_tries on an impossible target") {
  PolygonalNorm norm = from_slopes(slopes_of_strings({"0", "inf"}));
  CHECK_THROWS_AS(sample_good_parameters(norm, 2, 2, Rat(1000), 5, 7),
                  ExhaustedTries);
}

TEST_CASE("scale notes name the applied contraction") {
  CHECK(square_demo().scale_note.find("(4K)^-1") != std::string::npos);
  PowerSpec spec;
  spec.d = 1;
  spec.L = 2;
  spec.N = 2;
  spec.gamma = {Rat(13, 8)};
  CHECK(build_power_set(spec).scale_note.find("gammabar") !=
        std::string::npos);
}
