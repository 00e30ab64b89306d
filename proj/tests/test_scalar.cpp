#include <doctest.h>

#include "superspace/scalar.hpp"

using namespace superspace;

TEST_CASE("rational helpers") {
  CHECK(rising(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(falling(Rational(5), 2) == Rational(20));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(double_factorial(5) == Rational(15));
  CHECK(double_factorial(0) == Rational(1));
}

TEST_CASE("scalar arithmetic keeps pi powers separate") {
  Scalar a = Scalar::pi_half_power(Rational(1, 2), 1);  // (1/2) sqrt(pi)
  Scalar b = Scalar::pi_half_power(3, 2);               // 3 pi
  Scalar s = a + b;
  CHECK(s.terms().size() == 2);
  CHECK((a * b) == Scalar::pi_half_power(Rational(3, 2), 3));
  CHECK((a - a).is_zero());
  CHECK(a.reciprocal() * a == Scalar(1));
  CHECK(s.to_double() == doctest::Approx(0.5 * std::sqrt(M_PI) + 3 * M_PI));
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_exact(Rational(1, 2)) == Scalar::pi_half_power(1, 1));
  CHECK(gamma_exact(Rational(3, 2)) == Scalar::pi_half_power(Rational(1, 2), 1));
  CHECK(gamma_exact(Rational(5, 2)) == Scalar::pi_half_power(Rational(3, 4), 1));
  // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4/3 sqrt(pi)
  CHECK(gamma_exact(Rational(-1, 2)) == Scalar::pi_half_power(-2, 1));
  CHECK(gamma_exact(Rational(-3, 2)) ==
        Scalar::pi_half_power(Rational(4, 3), 1));
  CHECK(gamma_exact(Rational(4)) == Scalar(6));
  CHECK(gamma_reciprocal_exact(Rational(0)) == Scalar(0));
  CHECK(gamma_reciprocal_exact(Rational(-3)) == Scalar(0));
  CHECK(gamma_reciprocal_exact(Rational(3)) == Scalar(Rational(1, 2)));
}

TEST_CASE("sigma_M values") {
  CHECK(sigma_M(3) == Scalar::pi_half_power(4, 2));  // 4 pi
  CHECK(sigma_M(2) == Scalar::pi_half_power(2, 2));  // 2 pi
  CHECK(sigma_M(1) == Scalar(2));
  CHECK(sigma_M(0).is_zero());
  CHECK(sigma_M(-2).is_zero());
  CHECK(sigma_M(-4).is_zero());
  // sigma_{-1} = 2 pi^{-1/2} / Gamma(-1/2) = -1/pi
  CHECK(sigma_M(-1) == Scalar::pi_half_power(-1, -2));
}

TEST_CASE("scalar text form") {
  CHECK(sigma_M(3).str() == "4 * pi^1");
  CHECK(Scalar(Rational(4, 3)).str() == "4/3");
  CHECK((Scalar::pi_half_power(1, 1) + Scalar(2)).str() == "2 + 1 * pi^(1/2)");
  CHECK(Scalar(0).str() == "0");
}
