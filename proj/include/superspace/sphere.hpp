#pragma once

#include <functional>
#include <string>
#include <vector>

#include "superspace/superpoly.hpp"

namespace superspace {

/// Quadrature rule on the unit sphere S^{m-1}, m in {1,2,3,4}: weights
/// sum to sigma_m and polynomials up to `exactness` integrate exactly.
struct SphereRule {
  int m = 0;
  int exactness = 0;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;

  static SphereRule build(int m, int degree = 20);
  /// Plain-text rows "w x1 ... xm".
  static SphereRule load(const std::string& path, int m);
  void save(const std::string& path) const;

  double integrate(const std::function<double(const std::vector<double>&)>& f)
      const;
};

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int npts, std::vector<double>& x, std::vector<double>& w);

/// Closed-form radial profile sum_i c_i r^{p_i} exp(a_i r^2 + b_i r),
/// closed under d/dr and division by r: exactly the class produced by
/// restricting the Gaussian test family (and its radial modulations) to
/// rays. Used to evaluate layer integrals symbolically in r.
class RadialClosedForm {
 public:
  struct Term {
    double c, p, a, b;
  };
  RadialClosedForm() = default;
  static RadialClosedForm power(double c, double p) {
    RadialClosedForm f;
    f.add(c, p, 0.0, 0.0);
    return f;
  }
  void add(double c, double p, double a, double b);
  void add(const RadialClosedForm& o);
  /// The operator (d/d r^2) = (1/(2r)) d/dr.
  RadialClosedForm d_by_dr2() const;
  double eval(double r) const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

/// j-fold layer pairing with delta^{(j)}(1 - |w|^2):
/// (1/2) Int_{S^{m-1}} (d/dr^2)^j [r^{m-2} F(rw)]|_{r=1} dS_w; the caller
/// supplies r |-> r^{m-2} F(rw) per node as a RadialClosedForm.
double layer_integral(
    const SphereRule& rule, int order,
    const std::function<RadialClosedForm(const std::vector<double>&)>&
        radial_profile);

/// Exact layer moment of a pure power: (d/du)^j [u^{a/2}] at u = 1.
Rational layer_power_moment(const Rational& a, int j);

/// Pizzetti formula over the full variable set: exact Scalar.
Scalar pizzetti(const SuperPolynomial& p, Dims d);
/// Pizzetti over a sub-block of a joint algebra (integrates the block
/// variables over the supersphere, leaves the rest symbolic).
SuperPolynomial pizzetti_block(const SuperPolynomial& p, Dims d, int b0,
                               int f0);

/// Normalized supersphere integral for M = -2k on polynomials of degree
/// <= 2k+1 (rejected outside that range).
Scalar normalized_integral(const SuperPolynomial& p, Dims d);
SuperPolynomial normalized_integral_block(const SuperPolynomial& p, Dims d,
                                          int b0, int f0);

/// Concentrated-delta route for the supersphere integral of a
/// superpolynomial, evaluated with sphere quadrature; agrees with
/// pizzetti to quadrature accuracy.
double supersphere_integral_delta_route(const SuperPolynomial& f, Dims d,
                                        const SphereRule& rule);

/// Same route with an extra bosonic-radial factor g(|ux|) multiplying
/// every component (g in the RadialClosedForm class).
double supersphere_integral_delta_route_radial(
    const SuperPolynomial& f, Dims d, const SphereRule& rule,
    const RadialClosedForm& radial_factor);

/// Integral of f(|x|) F(x) over the supersphere, with |x| the SUPER norm:
/// f(|x|) is expanded through its finite Taylor series in the nilpotent
/// part of |x|^2, each layer carrying (d/dr^2)^k f as its radial factor.
double supersphere_integral_radial_super(const SuperPolynomial& f, Dims d,
                                         const SphereRule& rule,
                                         const RadialClosedForm& outer);

/// Funk-Hecke coefficients: alpha_{M,l}[t^j] and the normalized variant
/// alpha*_{M,l}[t^j] (M = -2k); zero when j+l is odd or j < l.
Scalar funk_hecke_alpha(int M, int ell, int j);
Scalar funk_hecke_alpha_star(int k, int ell, int j);

/// Built-in harmonics of degree <= 3 for the given dims, each verified
/// harmonic and homogeneous on construction.
struct HarmonicEntry {
  int ell;
  SuperPolynomial h;
};
std::vector<HarmonicEntry> builtin_harmonics(Dims d, int max_ell);

/// Funk-Hecke evaluation against a supplied harmonic: returns the
/// coefficient and cross-checks the full integral identity exactly
/// through pizzetti on the joint algebra.
Scalar funk_hecke(Dims d, int j, const HarmonicEntry& H, bool normalized);

/// Lemma-style reduction of L_{2j}[g](x): prefactor
/// 2 (-1)^j Gamma(j+1/2) / pi^{n+1/2} paired with the layer integral of
/// order n-j. Returns the exact prefactor.
Scalar lemma_L3_prefactor(Dims d, int j);

}  // namespace superspace
