#include <doctest.h>

#include "superspace/operators.hpp"

using namespace superspace;

namespace {

const std::vector<Dims> kDimsList = {{1, 1}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};

SuperPolynomial half(const SuperPolynomial& f) {
  return f.scaled(Scalar(Rational(1, 2)));
}

}  // namespace

TEST_CASE("basic derivative and euler examples") {
  Dims d{1, 2};
  auto f1 = SuperPolynomial::fermion(d.m, d.nf(), 0);
  auto f2 = SuperPolynomial::fermion(d.m, d.nf(), 1);
  auto x1 = SuperPolynomial::variable(d.m, d.nf(), 0);
  CHECK(apply({OpKind::partial_fermionic, d, 0}, f1 * f2) == f2);
  CHECK(apply({OpKind::partial_fermionic, d, 1}, f1 * f2) == -f1);
  auto m = x1 * x1 * f1;
  CHECK(apply({OpKind::euler, d}, m) == m.scaled(Scalar(3)));
}

TEST_CASE("laplacian_power_norm closed form vs symbolic laplacian") {
  for (Dims d : kDimsList) {
    for (int ell = 0; ell <= 4; ++ell) {
      auto x2l = supervector_even_power(d, 2 * ell);
      SuperPolynomial cur = x2l;
      for (int j = 0; j <= ell; ++j) {
        auto [factor, pw] = laplacian_power_norm(d, j, ell);
        auto expect = supervector_even_power(d, pw).scaled(factor);
        CHECK(cur == expect);
        cur = laplacian(cur, d);
      }
      // one extra application (j = ell + 1) annihilates
      CHECK(cur.is_zero());
      CHECK(laplacian_power_norm(d, ell + 1, ell).factor.is_zero());
    }
  }
}

TEST_CASE("laplacian_power_norm instances") {
  // Delta[x^2] = -2M
  auto v = laplacian_power_norm(Dims{3, 0}, 1, 1);
  CHECK(v.factor == Scalar(-6));
  auto w = laplacian_power_norm(Dims{2, 2}, 1, 1);
  CHECK(w.factor == Scalar(4));
  CHECK(laplacian_power_norm(Dims{3, 0}, 2, 1).factor.is_zero());
}

TEST_CASE("dirac anticommutator equals 2(E + M/2)") {
  for (Dims d : kDimsList) {
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 4)) {
      auto lhs = dirac_anticommutator_check(d, f);
      auto rhs = euler(f, d).scaled(Scalar(2)) + f.scaled(Scalar(d.M()));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("dirac anticommutator spec instances") {
  {
    Dims d{3, 1};
    auto one = SuperPolynomial::constant(d.m, d.nf(), Scalar(1));
    CHECK(dirac_anticommutator_check(d, one) == one.scaled(Scalar(1)));
  }
  {
    Dims d{2, 0};
    auto x1 = SuperPolynomial::variable(d.m, d.nf(), 0);
    CHECK(dirac_anticommutator_check(d, x1) == x1.scaled(Scalar(4)));
  }
  {
    Dims d{0, 1};
    auto f1 = SuperPolynomial::fermion(d.m, d.nf(), 0);
    CHECK(dirac_anticommutator_check(d, f1).is_zero());
  }
}

TEST_CASE("sl2 relations as operator identities") {
  for (Dims d : kDimsList) {
    const auto x2 = -norm_squared(d);  // the element x^2
    const Scalar Mhalf(Rational(d.M(), 2));
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 6)) {
      auto lap = [&](const SuperPolynomial& g) { return laplacian(g, d); };
      auto emh = [&](const SuperPolynomial& g) {
        return euler(g, d) + g.scaled(Mhalf);
      };
      auto xsq = [&](const SuperPolynomial& g) { return x2 * g; };

      // [Delta/2, -x^2/2] = E + M/2
      CHECK((lap(xsq(f)) - xsq(lap(f))).scaled(Scalar(Rational(-1, 4))) ==
            emh(f));
      // [Delta/2, E + M/2] = Delta
      CHECK(half(lap(emh(f))) - half(emh(lap(f))) == lap(f));
      // [-x^2/2, E + M/2] = x^2
      CHECK(-half(xsq(emh(f))) + half(emh(xsq(f))) == xsq(f));
    }
  }
}

TEST_CASE("dirac squared is minus the laplacian") {
  for (Dims d : kDimsList) {
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 4)) {
      auto d2 = dirac_left(dirac_left(f, d));
      CHECK(d2.is_scalar());
      CHECK(d2.scalar_part() == -laplacian(f, d));
    }
  }
}
