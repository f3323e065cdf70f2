#include "doctest.h"
#include "polydist/errors.hpp"
#include "polydist/rational.hpp"

using namespace polydist;

TEST_CASE("parse_rat accepts canonical and reducible forms") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("0") == Rat(0));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("+5/10") == Rat(1, 2));
  CHECK(parse_rat("012/4") == Rat(3));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat("/2"), ParseError);
  CHECK_THROWS_AS(parse_rat("2/"), ParseError);
  CHECK_THROWS_AS(parse_rat("a"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("rat_str round trips") {
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(2)) == "2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(parse_rat(rat_str(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("rat_sqrt_upper is exact on perfect squares") {
  CHECK(rat_sqrt_upper(Rat(4), 32) == Rat(2));
  CHECK(rat_sqrt_upper(Rat(9, 4), 32) == Rat(3, 2));
  CHECK(rat_sqrt_upper(Rat(1), 32) == Rat(1));
  CHECK(rat_sqrt_upper(Rat(0), 32) == Rat(0));
  CHECK(rat_sqrt_upper(Rat(25), 64) == Rat(5));
}

TEST_CASE("rat_sqrt_upper brackets irrational roots from above") {
  const Rat r = rat_sqrt_upper(Rat(2), 32);
  CHECK(r * r >= 2);
  // r <= sqrt(2) * (1 + 2^-32), so r^2 <= 2 * (1 + 2^-31 + 2^-64)
  CHECK(r * r <= Rat(2) * (Rat(1) + Rat(3, Int(1) << 32)));
  const Rat s = rat_sqrt_upper(Rat(5, 3), 16);
  CHECK(s * s >= Rat(5, 3));
  CHECK(s * s <= Rat(5, 3) * (Rat(1) + Rat(3, Int(1) << 16)));
}

TEST_CASE("pow_bracket collapses on exact powers") {
  PowBracket b = pow_bracket(Int(16), Rat(3, 4), 64);
  CHECK(b.exact);
  CHECK(b.lower == Rat(8));
  CHECK(b.upper == Rat(8));

  b = pow_bracket(Int(27), Rat(2, 3), 8);
  CHECK(b.exact);
  CHECK(b.lower == Rat(9));

  b = pow_bracket(Int(5), Rat(2), 64);
  CHECK(b.exact);
  CHECK(b.lower == Rat(25));

  b = pow_bracket(Int(7), Rat(1), 64);
  CHECK(b.exact);
  CHECK(b.lower == Rat(7));

  b = pow_bracket(Int(1), Rat(7, 5), 64);
  CHECK(b.exact);
  CHECK(b.lower == Rat(1));
}

TEST_CASE("pow_bracket brackets irrational powers tightly") {
  PowBracket b = pow_bracket(Int(2), Rat(1, 2), 64);
  CHECK_FALSE(b.exact);
  CHECK(b.lower * b.lower <= 2);
  CHECK(b.upper * b.upper >= 2);
  CHECK(b.upper - b.lower == Rat(1, Int(1) << 64));

  b = pow_bracket(Int(16), Rat(7, 6), 64);
  CHECK_FALSE(b.exact);
  // 16^(7/6) = 2^(14/3), between 25 and 26
  CHECK(b.lower > 25);
  CHECK(b.upper < 26);
  Rat lower_cubed = b.lower * b.lower * b.lower;
  Rat upper_cubed = b.upper * b.upper * b.upper;
  Rat target = rat_pow(Rat(16), 7);  // (n^(7/6))^6 squared-cubed layout
  CHECK(lower_cubed * lower_cubed <= target);
  CHECK(upper_cubed * upper_cubed >= target);
}

TEST_CASE("pow_bracket requires a positive exponent and base") {
  CHECK_THROWS_AS(pow_bracket(Int(0), Rat(1, 2), 32), Error);
  CHECK_THROWS_AS(pow_bracket(Int(2), Rat(0), 32), Error);
  CHECK_THROWS_AS(pow_bracket(Int(2), Rat(-1, 2), 32), Error);
}

TEST_CASE("grid rounding lands on the 2^-bits lattice") {
  CHECK(grid_ceil(Rat(1, 3), 4) == Rat(3, 8));
  CHECK(grid_floor(Rat(1, 3), 4) == Rat(5, 16));
  CHECK(grid_ceil(Rat(1, 2), 4) == Rat(1, 2));
  CHECK(grid_floor(Rat(1, 2), 4) == Rat(1, 2));
  CHECK(grid_ceil(Rat(-1, 3), 4) == Rat(-5, 16));
  CHECK(grid_floor(Rat(-1, 3), 4) == Rat(-3, 8));
  CHECK(grid_ceil(Rat(15, 8), 16) == Rat(15, 8));
}

TEST_CASE("rat_pow is exact integer exponentiation") {
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow(Rat(-1, 2), 2) == Rat(1, 4));
  CHECK(rat_pow(Rat(5, 7), 0) == Rat(1));
  CHECK(rat_pow(Rat(0), 5) == Rat(0));
}

TEST_CASE("abs_rat") {
  CHECK(abs_rat(Rat(-3, 4)) == Rat(3, 4));
  CHECK(abs_rat(Rat(3, 4)) == Rat(3, 4));
  CHECK(abs_rat(Rat(0)) == Rat(0));
}
