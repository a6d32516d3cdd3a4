#include <doctest.h>

#include <random>

#include "alcove/linalg.hpp"

using namespace alcove;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7, 3).floor() == 2);
  CHECK(Rat(-7, 3).floor() == -3);
  CHECK(Rat(-6, 3).floor() == -2);
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("exact solve and inverse") {
  MatR a(2, 2);
  a << Rat(2), Rat(-1), Rat(-1), Rat(2);
  VecR b(2);
  b << Rat(1), Rat(1);
  auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));
  MatR inv = inverse_exact(a);
  MatR prod = a * inv;
  CHECK(prod(0, 0) == Rat(1));
  CHECK(prod(0, 1) == Rat(0));

  // Inconsistent system
  MatR c(2, 1);
  c << Rat(1), Rat(1);
  VecR d(2);
  d << Rat(0), Rat(1);
  CHECK_FALSE(solve_exact(c, d).has_value());

  CHECK(rank_exact(a) == 2);
  MatR sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK(rank_exact(sing) == 1);
}

TEST_CASE("cone membership by exact simplex") {
  // 2D cone spanned by (1,0) and (1,1)
  MatR g(2, 2);
  g << Rat(1), Rat(1), Rat(0), Rat(1);
  auto in = [&](Int x, Int y) {
    VecR z(2);
    z << Rat(x), Rat(y);
    return cone_member(g, z);
  };
  CHECK(in(0, 0));
  CHECK(in(1, 0));
  CHECK(in(2, 1));
  CHECK(in(1, 1));
  CHECK_FALSE(in(0, 1));
  CHECK_FALSE(in(-1, 0));
  CHECK_FALSE(in(1, 2));

  // Random nonnegative combinations are members.
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    Int a = static_cast<Int>(rng() % 5), b = static_cast<Int>(rng() % 5);
    VecR z(2);
    z << Rat(a + b), Rat(b);
    CHECK(cone_member(g, z));
  }

  // Cone with lineality: span{(1,0)} + ray (0,1)
  MatR g2(2, 3);
  g2 << Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1);
  auto in2 = [&](Int x, Int y) {
    VecR z(2);
    z << Rat(x), Rat(y);
    return cone_member(g2, z);
  };
  CHECK(in2(5, 0));
  CHECK(in2(-5, 2));
  CHECK_FALSE(in2(0, -1));
}
