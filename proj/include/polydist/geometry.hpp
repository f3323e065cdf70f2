#ifndef POLYDIST_GEOMETRY_HPP
#define POLYDIST_GEOMETRY_HPP

#include <string>

#include "polydist/errors.hpp"
#include "polydist/rational.hpp"

namespace polydist {

struct Point2 {
  Rat x1;
  Rat x2;

  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x1 + b.x1, a.x2 + b.x2};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x1 - b.x1, a.x2 - b.x2};
  }
  friend Point2 operator*(const Rat& s, const Point2& p) {
    return {s * p.x1, s * p.x2};
  }
  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
};

inline Rat dot(const Point2& a, const Point2& b) {
  return a.x1 * b.x1 + a.x2 * b.x2;
}

inline Rat cross(const Point2& a, const Point2& b) {
  return a.x1 * b.x2 - a.x2 * b.x1;
}

inline Rat euclid_sq(const Point2& p) { return dot(p, p); }

inline bool lex_less(const Point2& a, const Point2& b) {
  int c = cmp(a.x1, b.x1);
  if (c != 0) return c < 0;
  return a.x2 < b.x2;
}

// Projective slope p/q, reduced, q >= 0; infinity is (1, 0).
struct Slope {
  Int p;
  Int q;

  Slope(Int num, Int den) : p(std::move(num)), q(std::move(den)) {
    if (p == 0 && q == 0)
      throw ParseError("slope (0, 0) is not a projective pair");
    if (q == 0) {
      p = 1;
      return;
    }
    if (q < 0) {
      p = -p;
      q = -q;
    }
    Int g = gcd(p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
  }

  static Slope infinity() { return Slope(1, 0); }
  static Slope from_rat(const Rat& v) { return Slope(v.get_num(), v.get_den()); }

  bool is_infinite() const { return q == 0; }

  // Direction vector (dx, dy) of a line with this slope.
  Point2 direction() const { return {Rat(q), Rat(p)}; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p == b.p && a.q == b.q;
  }
};

inline Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF")
    return Slope::infinity();
  return Slope::from_rat(parse_rat(text));
}

inline std::string slope_str(const Slope& s) {
  if (s.is_infinite()) return "inf";
  Rat v(s.p, s.q);
  v.canonicalize();
  return rat_str(v);
}

}  // namespace polydist

#endif
