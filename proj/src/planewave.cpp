#include "superspace/planewave.hpp"

#include <cmath>

namespace superspace {

namespace {

double pow_int(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return e >= 0 ? r : 1.0 / r;
}

/// Int_{R^m} K(|x|) phi(x) dV by radial x sphere quadrature.
double radial_pairing(const GaussianSuperFunction& phi, const SphereRule& rule,
                      const std::function<double(double)>& radial_weight,
                      double tol) {
  const int m = phi.dims().m;
  return integrate_0_inf(
      [&](double rho) {
        if (rho == 0.0) return 0.0;
        const double shell =
            rule.integrate([&](const std::vector<double>& w) {
              std::vector<double> x(m);
              for (int j = 0; j < m; ++j) x[j] = rho * w[j];
              return phi.component(0, x);
            });
        return radial_weight(rho) * pow_int(rho, m - 1) * shell;
      },
      tol);
}

}  // namespace

WeakPairResult verify_pw_identity(const PlaneWaveIdentityCase& c,
                                  const GaussianSuperFunction& phi,
                                  const SphereRule& rule, double tol) {
  const int m = c.m;
  if (phi.dims().m != m || phi.dims().n != 0)
    throw std::domain_error("plane-wave cases are bosonic");
  const auto data = radon_transform(phi);
  WeakPairResult out;

  switch (c.id) {
    case PlaneWaveIdentity::PWRLan: {
      const double lam = static_cast<double>(c.lambda);
      // lhs: (1/(pi^{(m-1)/2} Gamma((lam+1)/2))) Int_S <|p|^lam, R[phi]>
      const double sph = rule.integrate([&](const std::vector<double>& w) {
        const auto prof = data.profiles_at(w).at(0);
        return pair_kernel_1d({KernelFamily::abs_pow, c.lambda},
                              prof.as_test_function(), tol);
      });
      out.lhs = sph / (std::pow(M_PI, (m - 1) / 2.0) *
                       std::tgamma((lam + 1) / 2.0));
      // rhs: 2 <|x|^lam, phi> / Gamma((lam+m)/2) by radial quadrature
      const double radial = radial_pairing(
          phi, rule, [&](double rho) { return std::pow(rho, lam); }, tol);
      out.rhs = 2.0 * radial / std::tgamma((lam + m) / 2.0);
      return out;
    }
    case PlaneWaveIdentity::PWDelRm_even: {
      if (m % 2 != 0) throw std::domain_error("even case needs even m");
      const double sph = rule.integrate([&](const std::vector<double>& w) {
        const auto prof = data.profiles_at(w).at(0);
        return pair_kernel_1d({KernelFamily::abs_pow, Rational(-m)},
                              prof.as_test_function(), tol);
      });
      const double coef =
          (m / 2 % 2 == 0 ? 1.0 : -1.0) *
          static_cast<double>(factorial(m - 1)) / pow_int(2 * M_PI, m);
      out.lhs = coef * sph;
      out.rhs = phi.component(0, std::vector<double>(m, 0.0));
      return out;
    }
    case PlaneWaveIdentity::PWDelRm_odd: {
      if (m % 2 != 1) throw std::domain_error("odd case needs odd m");
      const double sph = rule.integrate([&](const std::vector<double>& w) {
        const auto prof = data.profiles_at(w).at(0);
        // <delta^{(m-1)}, R> = (-1)^{m-1} R^{(m-1)}(w, 0)
        return prof.deriv_n(m - 1).eval(0.0);
      });
      const double coef =
          ((m - 1) / 2 % 2 == 0 ? 1.0 : -1.0) / (2.0 * pow_int(2 * M_PI, m - 1));
      out.lhs = coef * sph;
      out.rhs = phi.component(0, std::vector<double>(m, 0.0));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

double cauchy_boundary_check(int m, const GaussianSuperFunction& phi,
                             const std::vector<double>& x0_seq,
                             const SphereRule& rule, double tol) {
  // scalar part of the paired difference:
  // -(2 x0 / sigma_{m+1}) Int phi(x) (x0^2 + |x|^2)^{-(m+1)/2} dV
  const double sig = sigma_M(m + 1).to_double();
  std::vector<double> vals;
  for (double x0 : x0_seq) {
    const double v = radial_pairing(
        phi, rule,
        [&](double rho) {
          return std::pow(x0 * x0 + rho * rho, -(m + 1) / 2.0);
        },
        tol);
    vals.push_back(-2.0 * x0 / sig * v);
  }
  // polynomial extrapolation to x0 = 0 (Neville)
  std::vector<double> x = x0_seq, f = vals;
  const int n = static_cast<int>(x.size());
  for (int level = 1; level < n; ++level)
    for (int i = 0; i < n - level; ++i)
      f[i] = ((0.0 - x[i + level]) * f[i] + (x[i] - 0.0) * f[i + 1]) /
             (x[i] - x[i + level]);
  return f[0];
}

double nu_kernel_boundary_pair(int m, int j, const GaussianSuperFunction& phi,
                               double x0, const SphereRule& rule, double tol) {
  // nu_{2j+2}^{m+1|0} = c(m+1, j+1) |x0 + x|^{2j+1-m}; the kernel is even
  // in x0, so the paired difference vanishes identically.
  const double c =
      ((j + 1) % 2 == 0 ? 1.0 : -1.0) *
      std::tgamma((m + 1) / 2.0 - (j + 1)) /
      (pow_int(2.0, 2 * (j + 1)) * std::pow(M_PI, (m + 1) / 2.0) *
       std::tgamma(j + 1.0));
  auto val = [&](double t) {
    return c * radial_pairing(
                   phi, rule,
                   [&](double rho) {
                     return std::pow(t * t + rho * rho, (2 * j + 1 - m) / 2.0);
                   },
                   tol);
  };
  return val(x0) - val(-x0);
}

double phi_kernel_boundary_pair(int m, int j, const GaussianSuperFunction& phi,
                                double x0, const SphereRule& rule, double tol) {
  // I_j(x0) = 2 d(m+1,j) x0 Int phi(x) |x0+x|^{-(m+1-2j)} dV -> 0
  const double dmj = ((j + 1) % 2 == 0 ? 1.0 : -1.0) *
                     std::tgamma((m + 1) / 2.0 - j) /
                     (pow_int(2.0, 2 * j + 1) * std::pow(M_PI, (m + 1) / 2.0) *
                      std::tgamma(j + 1.0));
  const double v = radial_pairing(
      phi, rule,
      [&](double rho) {
        return std::pow(x0 * x0 + rho * rho, -(m + 1 - 2 * j) / 2.0);
      },
      tol);
  return 2.0 * dmj * x0 * v;
}

Rational layer_moment_exact(int j) {
  // (1/2) d^j/dt^j [t^{j-1}] |_{t=1}: a degree-(j-1) polynomial loses to
  // j derivatives except at j = 0.
  if (j == 0) return Rational(1, 2);
  return falling(Rational(j - 1), j) / 2;  // = 0 exactly
}

Rational log_layer_moment_exact(int j) {
  if (j == 0) throw std::domain_error("log layer moment needs j >= 1");
  // (1/4) d^j/dt^j [t^{j-1} ln t] |_{t=1}, carried symbolically as
  // c t^k ln t + e t^k pairs.
  std::map<long, std::pair<Rational, Rational>> terms;  // k -> (log, plain)
  terms[j - 1] = {Rational(1), Rational(0)};
  for (int step = 0; step < j; ++step) {
    std::map<long, std::pair<Rational, Rational>> next;
    for (const auto& [k, ce] : terms) {
      const auto& [clog, cplain] = ce;
      if (clog != 0) {
        next[k - 1].first += clog * k;    // k t^{k-1} ln t
        next[k - 1].second += clog;       // + t^{k-1}
      }
      if (cplain != 0) next[k - 1].second += cplain * k;
    }
    terms = std::move(next);
  }
  Rational v = 0;
  for (const auto& [k, ce] : terms) v += ce.second;  // ln 1 = 0
  return v / 4;
}

}  // namespace superspace
