#include "superspace/dist1d.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace superspace {

namespace {

/// Derivative polynomials of P(t) e^{-a(t-mu)^2/2}: each derivative maps
/// P -> P' - a (t-mu) P, so every order stays in the same class.
struct GaussPolyState {
  std::vector<std::vector<double>> polys;  // per order, coeffs in t
  double alpha, mu;

  static std::vector<double> step(const std::vector<double>& p, double alpha,
                                  double mu) {
    std::vector<double> r(p.size() + 1, 0.0);
    // derivative of the polynomial part
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] += i * p[i];
    // -alpha (t - mu) P
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i + 1] += -alpha * p[i];
      r[i] += alpha * mu * p[i];
    }
    while (r.size() > 1 && r.back() == 0.0) r.pop_back();
    return r;
  }

  const std::vector<double>& poly(int order) {
    while (static_cast<int>(polys.size()) <= order)
      polys.push_back(step(polys.back(), alpha, mu));
    return polys[order];
  }

  double eval(int order, double t) {
    const auto& p = poly(order);
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v * std::exp(-alpha * (t - mu) * (t - mu) / 2.0);
  }
};

int poly_parity(const std::vector<double>& coeffs, double alpha, double mu) {
  if (mu != 0.0) return 0;
  bool even = true, odd = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    if (i % 2 == 0) odd = false;
    if (i % 2 == 1) even = false;
  }
  (void)alpha;
  if (even) return 1;
  if (odd) return -1;
  return 0;
}

}  // namespace

TestFunction1D TestFunction1D::gauss_poly(std::vector<double> coeffs,
                                          double alpha, double mu) {
  const int parity = poly_parity(coeffs, alpha, mu);
  auto state = std::make_shared<GaussPolyState>();
  state->polys.push_back(std::move(coeffs));
  state->alpha = alpha;
  state->mu = mu;
  return TestFunction1D(
      [state](int order, double t) { return state->eval(order, t); }, parity);
}

TestFunction1D TestFunction1D::reflected() const {
  auto base = eval_;
  return TestFunction1D(
      [base](int order, double t) {
        const double v = base(order, -t);
        return (order % 2 == 0) ? v : -v;
      },
      parity_);
}

TestFunction1D TestFunction1D::even_part_doubled() const {
  auto base = eval_;
  return TestFunction1D(
      [base](int order, double t) {
        const double v = base(order, t);
        const double w = base(order, -t);
        return (order % 2 == 0) ? v + w : v - w;
      },
      +1);
}

TestFunction1D TestFunction1D::odd_part_doubled() const {
  auto base = eval_;
  return TestFunction1D(
      [base](int order, double t) {
        const double v = base(order, t);
        const double w = base(order, -t);
        return (order % 2 == 0) ? v - w : v + w;
      },
      -1);
}

DeltaTermDescriptor residue_1d(KernelFamily family, int ell) {
  switch (family) {
    case KernelFamily::t_plus: {
      Rational c = Rational(1) / factorial(ell - 1);
      if ((ell - 1) % 2 == 1) c = -c;
      return {c, ell - 1};
    }
    case KernelFamily::t_minus:
      return {Rational(1) / factorial(ell - 1), ell - 1};
    case KernelFamily::abs_pow:
      // pole at lambda = -2l-1
      return {Rational(2) / factorial(2 * ell), 2 * ell};
    case KernelFamily::sgn_abs_pow:
      // pole at lambda = -2l
      return {Rational(-2) / factorial(2 * ell - 1), 2 * ell - 1};
    case KernelFamily::delta_derivative:
      throw std::domain_error("delta has no residue");
  }
  throw std::logic_error("unreachable");
}

namespace {

bool is_negative_integer(const Rational& q) {
  return denominator(q) == 1 && q <= -1;
}

/// <t_+^l, phi> by the split-at-1 continuation: Taylor-subtracted
/// integral on (0,1], plain tail on (1,inf), boundary terms in closed
/// form. `ell` Taylor terms are removed; requires lambda + ell > -1.
double tplus_pair(double lambda, int ell, const TestFunction1D& phi,
                  const std::vector<bool>& exact_zero, double tol) {
  std::vector<double> taylor(ell);
  for (int j = 0; j < ell; ++j)
    taylor[j] =
        exact_zero[j] ? 0.0
                      : phi.deriv(j, 0.0) / static_cast<double>(factorial(j));

  // Near zero the subtracted value is evaluated through the Taylor
  // remainder; direct subtraction would lose all precision under the
  // t^lambda magnification.
  const double t_switch = 0.25;
  const int remainder_terms = 34;
  std::vector<double> highly(remainder_terms);
  for (int j = 0; j < remainder_terms; ++j) {
    const int order = ell + j;
    highly[j] = phi.deriv_at_zero_is_exact_zero(order)
                    ? 0.0
                    : phi.deriv(order, 0.0) /
                          static_cast<double>(factorial(order));
  }

  // t^lambda times the subtracted function; near zero both factors fold
  // into one series in t^{lambda+ell+j} (all exponents > -1), so no
  // overflowing power is ever formed under the tanh_sinh nodes.
  auto integrand = [&](double t) {
    if (t < t_switch) {
      double acc = 0.0;
      for (int j = 0; j < remainder_terms; ++j)
        if (highly[j] != 0.0) acc += highly[j] * std::pow(t, lambda + ell + j);
      return acc;
    }
    double s = phi(t);
    double tp = 1.0;
    for (int j = 0; j < ell; ++j) {
      s -= taylor[j] * tp;
      tp *= t;
    }
    return std::pow(t, lambda) * s;
  };

  boost::math::quadrature::tanh_sinh<double> ts;
  const double head = ts.integrate(integrand, 0.0, 1.0, tol);

  boost::math::quadrature::exp_sinh<double> es;
  const double tail = es.integrate(
      [&](double t) { return std::pow(t, lambda) * phi(t); }, 1.0,
      std::numeric_limits<double>::infinity(), tol);

  double boundary = 0.0;
  for (int j = 0; j < ell; ++j) {
    if (exact_zero[j] || taylor[j] == 0.0) continue;
    boundary += taylor[j] / (lambda + j + 1);
  }
  return head + tail + boundary;
}

double tplus_like(const Rational& lambda, const TestFunction1D& phi,
                  double tol) {
  const double lam = static_cast<double>(lambda);
  const int ell = std::max(0, static_cast<int>(std::floor(-lam)) + 1);
  std::vector<bool> zero(ell);
  for (int j = 0; j < ell; ++j) zero[j] = phi.deriv_at_zero_is_exact_zero(j);
  // A boundary term at lambda + j + 1 = 0 must carry an exact zero.
  for (int j = 0; j < ell; ++j)
    if (lambda + j + 1 == 0 && !zero[j])
      throw std::domain_error("pairing hits a pole term");
  return tplus_pair(lam, ell, phi, zero, tol);
}

}  // namespace

double pair_kernel_1d(const Kernel1D& k, const TestFunction1D& phi,
                      double tol) {
  switch (k.family) {
    case KernelFamily::delta_derivative: {
      const double v = phi.deriv(k.delta_order, 0.0);
      return (k.delta_order % 2 == 0) ? v : -v;
    }
    case KernelFamily::t_plus: {
      if (is_negative_integer(k.lambda)) {
        const int ell = -static_cast<int>(numerator(k.lambda));
        throw PoleError("t_+^lambda pole", residue_1d(k.family, ell));
      }
      return tplus_like(k.lambda, phi, tol);
    }
    case KernelFamily::t_minus: {
      if (is_negative_integer(k.lambda)) {
        const int ell = -static_cast<int>(numerator(k.lambda));
        throw PoleError("t_-^lambda pole", residue_1d(k.family, ell));
      }
      return tplus_like(k.lambda, phi.reflected(), tol);
    }
    case KernelFamily::abs_pow: {
      if (is_negative_integer(k.lambda) && numerator(k.lambda) % 2 != 0) {
        const int ell = (-static_cast<int>(numerator(k.lambda)) - 1) / 2;
        throw PoleError("|t|^lambda pole", residue_1d(k.family, ell));
      }
      return tplus_like(k.lambda, phi.even_part_doubled(), tol);
    }
    case KernelFamily::sgn_abs_pow: {
      if (is_negative_integer(k.lambda) && numerator(k.lambda) % 2 == 0) {
        const int ell = -static_cast<int>(numerator(k.lambda)) / 2;
        throw PoleError("sgn|t|^lambda pole", residue_1d(k.family, ell));
      }
      return tplus_like(k.lambda, phi.odd_part_doubled(), tol);
    }
  }
  throw std::logic_error("unreachable");
}

double integrate_01(const std::function<double(double)>& f, double tol) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, 0.0, 1.0, tol);
}

double integrate_1_inf(const std::function<double(double)>& f, double tol) {
  boost::math::quadrature::exp_sinh<double> es;
  return es.integrate(f, 1.0, std::numeric_limits<double>::infinity(), tol);
}

double integrate_0_inf(const std::function<double(double)>& f, double tol) {
  boost::math::quadrature::exp_sinh<double> es;
  return es.integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol);
}

double integrate_R(const std::function<double(double)>& f, double tol) {
  boost::math::quadrature::gauss_kronrod<double, 31> gk;
  return gk.integrate(f, -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(), 12, tol);
}

}  // namespace superspace
