#include <Eigen/LU>

#include "doctest.h"
#include "macd/rational.hpp"
#include "macd/types.hpp"

using namespace macd;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(2, 5);
  CHECK(a + b == Rational(11, 15));
  CHECK(a * b == Rational(2, 15));
  CHECK(a - b == Rational(-1, 15));
  CHECK(a / b == Rational(5, 6));
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK_THROWS_AS(a / Rational(0), division_by_zero);
  CHECK_THROWS_AS(inverse(Rational(0)), division_by_zero);
}

TEST_CASE("integer powers, including negative exponents") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(pow(Rational(-1, 2), 3) == Rational(-1, 8));
}

TEST_CASE("floor and integer conversion") {
  CHECK(Rational(7, 3).floor_long() == 2);
  CHECK(Rational(-7, 3).floor_long() == -3);
  CHECK(Rational(12, 4).as_long() == 3);
  CHECK_THROWS(Rational(1, 2).as_long());
}

TEST_CASE("exact linear solves through Eigen") {
  MatQ A(3, 3);
  A << Rational(2), Rational(-1), Rational(0),
       Rational(-1), Rational(2), Rational(-1),
       Rational(0), Rational(-1), Rational(2);
  Eigen::FullPivLU<MatQ> lu(A);
  CHECK(lu.rank() == 3);
  MatQ inv = lu.inverse();
  MatQ prod = A * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == Rational(i == j ? 1 : 0));
  // A_3 Cartan determinant is 4
  CHECK(inv(0, 0) == Rational(3, 4));
}
