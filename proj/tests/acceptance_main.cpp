// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "superspace/operators.hpp"
#include "superspace/planewave.hpp"
#include "superspace/radon.hpp"
#include "superspace/superdist.hpp"

using namespace superspace;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, double err = -1.0,
            double tol = -1.0) {
  if (err >= 0)
    std::printf("%s  criterion %-2d %s (err=%.3e tol=%.0e)\n",
                ok ? "PASS" : "FAIL", idx, what, err, tol);
  else
    std::printf("%s  criterion %-2d %s (exact)\n", ok ? "PASS" : "FAIL", idx,
                what);
  if (!ok) ++failures;
}

const std::vector<Dims> kAlgebraDims = {{1, 1}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};

void criterion_1_exact_algebra() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (Dims d : kAlgebraDims) {
    const Scalar Mhalf(Rational(d.M(), 2));
    const auto x2 = -norm_squared(d);
    for (const auto& f : enumerate_monomials(d.m, d.nf(), 6)) {
      auto lap = [&](const SuperPolynomial& g) { return laplacian(g, d); };
      auto emh = [&](const SuperPolynomial& g) {
        return euler(g, d) + g.scaled(Mhalf);
      };
      auto half = [](const SuperPolynomial& g) {
        return g.scaled(Scalar(Rational(1, 2)));
      };
      auto xs = [&](const SuperPolynomial& g) { return x2 * g; };
      ok = ok &&
           ((lap(xs(f)) - xs(lap(f))).scaled(Scalar(Rational(-1, 4))) ==
            emh(f)) &&
           (half(lap(emh(f))) - half(emh(lap(f))) == lap(f)) &&
           (-half(xs(emh(f))) + half(emh(xs(f))) == xs(f));
      if (f.degree() <= 6) {
        ok = ok && (dirac_anticommutator_check(d, f) ==
                    euler(f, d).scaled(Scalar(2)) + f.scaled(Scalar(d.M())));
        auto d2 = dirac_left(dirac_left(f, d));
        ok = ok && d2.is_scalar() && (d2.scalar_part() == -lap(f));
      }
    }
    for (int ell = 0; ell <= 4; ++ell) {
      SuperPolynomial cur = supervector_even_power(d, 2 * ell);
      for (int j = 0; j <= ell; ++j) {
        auto [factor, pw] = laplacian_power_norm(d, j, ell);
        ok = ok && (cur == supervector_even_power(d, pw).scaled(factor));
        cur = laplacian(cur, d);
      }
      ok = ok && cur.is_zero();
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  ok = ok && secs < 10.0;
  std::printf("       (algebra suite wall time %.2f s, budget 10 s)\n", secs);
  report(1, "exact algebra: sl2, anticommutator, Dirac^2, Laplacian powers",
         ok);
}

void criterion_2_pizzetti_consistency() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (Dims d : {Dims{2, 1}, Dims{3, 1}, Dims{2, 2}}) {
    auto rule = SphereRule::build(d.m, 24);
    for (int t = 0; t < 50; ++t) {
      auto p = random_superpolynomial(rng, d.m, d.nf(), 6, 6);
      const double exact = pizzetti(p, d).to_double();
      const double quad = supersphere_integral_delta_route(p, d, rule);
      worst = std::max(worst, std::abs(quad - exact) /
                                  std::max(1.0, std::abs(exact)));
    }
  }
  bool exact_sigma = sigma_M(3) == Scalar::pi_half_power(4, 2) &&
                     sigma_M(1) == Scalar(2) && sigma_M(0).is_zero() &&
                     sigma_M(-2).is_zero() && sigma_M(-4).is_zero();
  for (Dims d : kAlgebraDims)
    exact_sigma =
        exact_sigma &&
        (pizzetti(SuperPolynomial::constant(d.m, d.nf(), Scalar(1)), d) ==
         sigma_M(d.M()));
  report(2, "Pizzetti vs concentrated-delta route; sigma_M exact",
         worst <= 1e-8 && exact_sigma, worst, 1e-8);
}

void criterion_3_funk_hecke() {
  bool ok = true;
  try {
    for (Dims d : {Dims{3, 1}, Dims{2, 2}})
      for (const auto& H : builtin_harmonics(d, 3))
        for (int j = 0; j <= 6; ++j) funk_hecke(d, j, H, false);
    for (Dims d : {Dims{2, 2}, Dims{0, 2}, Dims{2, 3}}) {
      const int k = -d.M() / 2;
      for (const auto& H : builtin_harmonics(d, 3))
        for (int j = 0; j + H.ell <= 2 * k + 1 && j <= 6; ++j)
          funk_hecke(d, j, H, true);
    }
  } catch (const std::exception& e) {
    std::printf("       funk_hecke failure: %s\n", e.what());
    ok = false;
  }
  report(3, "Funk-Hecke alpha and alpha* vs Pizzetti expansion, exact", ok);
}

void criterion_4_fundamental_solution() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 15);
  bool ok = true;
  for (int ell = 1; ell <= 12; ++ell)
    for (int t = 0; t < 20; ++t)
      ok = ok && (chu_vandermonde_sum(ell, Rational(num(rng), den(rng))) == 0);
  for (Dims d : {Dims{3, 1}, Dims{2, 2}})
    for (Rational s : {Rational(1, 2), Rational(3, 2)})
      ok = ok && fundsol_coefficient_system_check(d, s) &&
           fundsol_reassembly_check(d, s);
  report(4, "Lemma TechLem sum == 0; fundamental-solution system+kernel", ok);
}

void criterion_5_inversion() {
  const auto start = std::chrono::steady_clock::now();
  double worst_odd = 0.0, worst_even = 0.0, worst_neg = 0.0;
  {
    Dims d{3, 1};
    auto rule = SphereRule::build(3, 20);
    auto phi = make_test_function("gauss_mix", d);
    auto data = radon_transform(phi);
    const std::vector<std::vector<double>> pts{{0, 0, 0},
                                               {0.5, 0, 0},
                                               {-0.3, 0.2, 0.1},
                                               {0.2, 0.2, -0.4},
                                               {0.0, 0.7, 0.0}};
    for (const auto& y : pts)
      worst_odd = std::max(worst_odd, invert(data, phi, y, rule).rel_err);
  }
  {
    Dims d{4, 1};
    auto rule = SphereRule::build(4, 14);
    auto phi = make_test_function("gauss_mix", d);
    auto data = radon_transform(phi);
    for (const auto& y : {std::vector<double>{0, 0, 0, 0},
                          std::vector<double>{0.3, 0, -0.2, 0},
                          std::vector<double>{0.1, 0.4, 0, 0.2}})
      worst_even = std::max(worst_even, invert(data, phi, y, rule).rel_err);
  }
  bool neg_ok = true;
  {
    Dims d{2, 2};
    auto rule = SphereRule::build(2, 24);
    auto phi = make_test_function("gauss_mix", d);
    auto data = radon_transform(phi);
    for (const auto& y :
         {std::vector<double>{0, 0}, std::vector<double>{0.2, -0.4},
          std::vector<double>{-0.5, 0.1}})
      worst_neg = std::max(worst_neg, invert(data, phi, y, rule).rel_err);
    // independent moment form of the first summand
    const std::vector<double> y{0.2, -0.4};
    const double t1 = negative_even_first_term(data, phi, y, rule);
    std::vector<double> my{-0.2, 0.4};
    const double moment = phi.translated(my)
                              .mul_superpoly(norm_squared(d))
                              .super_integral() *
                          2.0;  // (2k)! = 2 at k = 1
    neg_ok = std::abs(t1 - moment) <= 1e-6 * std::max(1.0, std::abs(moment));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("       (inversion cases wall time %.2f s, budget 300 s each)\n",
              secs);
  report(5, "Radon inversion (3,1) odd", worst_odd <= 1e-3 && secs < 900,
         worst_odd, 1e-3);
  report(5, "Radon inversion (4,1) even", worst_even <= 1e-2, worst_even,
         1e-2);
  report(5, "Radon inversion (2,2) negative + moment form",
         worst_neg <= 1e-2 && neg_ok, worst_neg, 1e-2);
}

void criterion_6_fermionic_inversion() {
  bool ok = true;
  for (int n : {1, 2}) {
    const int nf = 2 * n;
    for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
      auto phi = GrassmannExact::monomial(nf, mask, Scalar(1));
      ok = ok && (invert_fermionic(phi, n) == phi);
    }
  }
  // golden n=1 value: prefactor -pi/2, Delta_w` value -2/pi, product 1
  const Scalar pref = Scalar(Rational(1, 2)) * sigma_M(-1).reciprocal();
  ok = ok && (pref == Scalar::pi_half_power(Rational(-1, 2), 2));
  ok = ok && (invert_fermionic(GrassmannExact::one(2), 1) ==
              GrassmannExact::one(2));
  report(6, "fermionic inversion exact on Grassmann bases; golden n=1", ok);
}

void criterion_7_unified_formula() {
  double worst20 = 0.0, worst31 = 0.0;
  {
    Dims d{2, 0};
    auto rule = SphereRule::build(2, 24);
    auto phi = make_test_function("gauss_shifted", d);
    for (const auto& x : {std::vector<double>{0, 0},
                          std::vector<double>{0.4, 0.1},
                          std::vector<double>{-0.3, 0.6}}) {
      auto [lhs, rhs] = backprojection_identity(phi, x, rule, 1e-10);
      const double l = lhs.coefficient(0), r = rhs.coefficient(0);
      worst20 = std::max(worst20, std::abs(l - r) / std::abs(r));
    }
  }
  {
    Dims d{3, 1};
    auto rule = SphereRule::build(3, 20);
    auto phi = make_test_function("gauss_mix", d);
    for (const auto& x : {std::vector<double>{0, 0, 0},
                          std::vector<double>{0.4, -0.2, 0.1},
                          std::vector<double>{0.0, 0.5, 0.3}}) {
      auto [lhs, rhs] = backprojection_identity(phi, x, rule, 1e-9);
      double maxd = 0, maxr = 0;
      const auto diff = lhs - rhs;
      for (const auto& [mask, c] : diff.terms())
        maxd = std::max(maxd, std::abs(c));
      for (const auto& [mask, c] : rhs.terms())
        maxr = std::max(maxr, std::abs(c));
      worst31 = std::max(worst31, maxd / maxr);
    }
  }
  report(7, "R*R = 2^M pi^(M-1) K*phi at (2,0)", worst20 <= 1e-2, worst20,
         1e-2);
  report(7, "R*R = 2 phi at (3,1), M = 1", worst31 <= 1e-3, worst31, 1e-3);
}

void criterion_8_plane_waves() {
  double worst_delta = 0.0, worst_lan = 0.0;
  {
    auto rule = SphereRule::build(2, 24);
    auto phi = make_test_function("gauss", Dims{2, 0});
    auto r = verify_pw_identity({2, PlaneWaveIdentity::PWDelRm_even, 0}, phi,
                                rule);
    worst_delta = std::max(worst_delta, r.rel_err());
    for (Rational lam : {Rational(1), Rational(1, 2), Rational(-1, 2)}) {
      auto v = verify_pw_identity({2, PlaneWaveIdentity::PWRLan, lam}, phi,
                                  rule);
      worst_lan = std::max(worst_lan, v.rel_err());
    }
  }
  {
    auto rule = SphereRule::build(3, 20);
    auto phi = make_test_function("gauss", Dims{3, 0});
    auto r = verify_pw_identity({3, PlaneWaveIdentity::PWDelRm_odd, 0}, phi,
                                rule);
    worst_delta = std::max(worst_delta, r.rel_err());
  }
  report(8, "plane-wave delta recovery (m = 2, 3)", worst_delta <= 1e-3,
         worst_delta, 1e-3);
  report(8, "plane-wave |x|^lambda identity (m = 2)", worst_lan <= 1e-6,
         worst_lan, 1e-6);
}

void criterion_9_central_slice() {
  double worst = 0.0;
  for (Dims d : {Dims{2, 0}, Dims{2, 1}, Dims{3, 1}}) {
    auto phi = make_test_function(d.n > 0 ? "gauss_mix" : "gauss_shifted", d);
    std::vector<double> w(d.m, 0.0);
    w[0] = 0.6;
    w[d.m - 1] = -0.8;
    double nw = 0;
    for (double v : w) nw += v * v;
    for (double& v : w) v /= std::sqrt(nw);
    for (double r : {0.0, 0.8, 1.7}) {
      auto [lhs, rhs] = central_slice_check(phi, w, r);
      const auto diff = lhs - rhs;
      for (const auto& [mask, c] : diff.terms())
        worst = std::max(worst, std::abs(c));
    }
  }
  report(9, "central-slice identity on the Gaussian family", worst <= 1e-8,
         worst, 1e-8);
}

void criterion_10_appendix() {
  bool ok = layer_moment_exact(0) == Rational(1, 2);
  for (int j = 1; j <= 8; ++j) ok = ok && (layer_moment_exact(j) == 0);
  for (int j = 1; j <= 8; ++j)
    ok = ok && (log_layer_moment_exact(j) == factorial(j - 1) / 4);
  for (int ell = 0; ell <= 10; ++ell) {
    Rational H = 0;
    for (int i = 1; i <= ell; ++i) H += Rational(1, i);
    ok = ok && (log_primitive_coeff(ell) == H / factorial(ell));
  }
  double worst = 0.0;
  const double h = 1e-5;
  for (int ell = 0; ell <= 6; ++ell)
    for (double x : {0.6, 1.0, 2.2}) {
      const double fd = (log_primitive_eval(ell + 1, x + h) -
                         log_primitive_eval(ell + 1, x - h)) /
                        (2 * h);
      worst = std::max(worst,
                       std::abs(fd - log_primitive_eval(ell, x)) /
                           std::max(1.0, std::abs(log_primitive_eval(ell, x))));
    }
  report(10, "appendix layer moments and log-primitive family",
         ok && worst <= 1e-6, worst, 1e-6);
}

}  // namespace

int main() {
  criterion_1_exact_algebra();
  criterion_2_pizzetti_consistency();
  criterion_3_funk_hecke();
  criterion_4_fundamental_solution();
  criterion_5_inversion();
  criterion_6_fermionic_inversion();
  criterion_7_unified_formula();
  criterion_8_plane_waves();
  criterion_9_central_slice();
  criterion_10_appendix();
  if (failures) {
    std::printf("%d criterion checks FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
