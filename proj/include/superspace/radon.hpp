#pragma once

#include <complex>
#include <iosfwd>
#include <optional>

#include "superspace/dist1d.hpp"
#include "superspace/gaussfun.hpp"
#include "superspace/sphere.hpp"

namespace superspace {

/// Profile Q(p - mu) exp(-(p - mu)^2/2): the closed form of the bosonic
/// Radon transform of the Gaussian family, exactly differentiable and
/// integrable in p.
struct RadonProfile {
  double mu = 0.0;
  std::vector<double> q;  // coefficients in tau = p - mu

  double eval(double p) const;
  RadonProfile deriv() const;
  RadonProfile deriv_n(int k) const;
  double integrate() const;                      // Int_R dp, closed form
  std::complex<double> fourier(double r) const;  // Int e^{-irp} . dp
  TestFunction1D as_test_function() const;
  void add_scaled(const RadonProfile& o, double c);
};

/// R_m[P(.) e^{-|.-c|^2/2}](w, p) for a unit direction w, computed by
/// rotating to hyperplane coordinates and integrating the Gaussian
/// moments exactly.
RadonProfile bosonic_radon_profile(const PolyND& P,
                                   const std::vector<double>& c,
                                   const std::vector<double>& w);

/// Hyperplane-quadrature fallback for cross-checks (m <= 3).
double bosonic_radon_numeric(const PolyND& P, const std::vector<double>& c,
                             const std::vector<double>& w, double p,
                             double tol = 1e-10);

/// The super Radon transform R_{m|2n}[phi](w, p): per w`-subset B a
/// closed-form profile, represented as an exact recipe over the source
/// components and assembled lazily at quadrature nodes. Component B
/// extends off the unit sphere with homogeneity degree -(1 + |B|).
class RadonData {
 public:
  struct Piece {
    double coeff;         // Berezin pairing coefficient, sign included
    int deriv;            // order of d_p applied to the bosonic profile
    std::uint32_t amask;  // source component
  };

  RadonData() = default;
  RadonData(GaussianSuperFunction phi,
            std::map<std::uint32_t, std::vector<Piece>> recipe)
      : phi_(std::move(phi)), recipe_(std::move(recipe)) {}

  Dims dims() const { return phi_.dims(); }
  const GaussianSuperFunction& source() const { return phi_; }
  const std::map<std::uint32_t, std::vector<Piece>>& recipe() const {
    return recipe_;
  }
  std::map<std::uint32_t, RadonProfile> profiles_at(
      const std::vector<double>& w) const;

 private:
  GaussianSuperFunction phi_;
  std::map<std::uint32_t, std::vector<Piece>> recipe_;
};

RadonData radon_transform(const GaussianSuperFunction& phi);

/// Both sides of the central-slice identity at (w, r); the fermionic
/// part of w stays symbolic, so the values are Grassmann elements over
/// the w` generators with complex coefficients.
struct CentralSlicePair {
  GrassmannCx lhs, rhs;
};
CentralSlicePair central_slice_check(const GaussianSuperFunction& phi,
                                     const std::vector<double>& w, double r);

/// <g(p), R[phi](w, p - a)> for an even shift a = a0 + a_nil with the
/// nilpotent part in the w` algebra; Grassmann-valued.
GrassmannNum pair_kernel_radon(const Kernel1D& g, const RadonData& data,
                               const std::vector<double>& w, double a0,
                               const GrassmannNum& a_nil, double tol = 1e-10);

/// Evaluates S(p0) = Int_SS d_p^{extra} R(w, p0 + <x,w>) dS_w with the
/// supersphere handled by the concentrated-delta route: Berezin over w`,
/// layer integrals in w via the homogeneity-based radial extension, and
/// sphere quadrature. The fermionic part of the evaluation point stays
/// symbolic: results live over the y` generators.
class DualEvaluator {
 public:
  DualEvaluator(const RadonData& data, const SphereRule& rule,
                std::vector<double> x, int extra_derivs);
  GrassmannNum eval(double p_offset) const;
  Dims dims() const { return dims_; }

 private:
  // One layer contribution: the q-fold u-derivative of
  // u^alpha h(p u^{-1/2} + <x,w>) at u = 1 expands into terms
  // c p^{ppow} h^{(dp)}(p + <x,w>); the offset is not inert under the
  // radial extension.
  struct Term {
    std::uint32_t ymask;
    double weight;  // kappa * chain coefficient
    std::uint32_t B;
    int derivs;  // total d_p order on the profile
    int ppow;    // power of the p-offset
  };
  Dims dims_;
  std::vector<Term> terms_;
  // per node: inner product <x,w>, node weight, per (B,derivs) profile
  struct NodeData {
    double xw, weight;
    std::map<std::pair<std::uint32_t, int>, RadonProfile> prof;
  };
  std::vector<NodeData> nodes_;
};

GrassmannNum dual_radon_shifted(const RadonData& data, const SphereRule& rule,
                                const std::vector<double>& x, double p_offset,
                                int extra_derivs);

struct InversionReport {
  GrassmannNum recovered;
  GrassmannNum reference;
  double abs_err = 0.0, rel_err = 0.0;
};

/// Explicit inversion: case selected by M (odd >= 1, even >= 2, or
/// M = -2k through the log-primitive formula). Odd negative M and m = 0
/// raise unsupported-case errors.
struct UnsupportedCase : std::domain_error {
  using std::domain_error::domain_error;
};
InversionReport invert(const RadonData& data, const GaussianSuperFunction& phi,
                       const std::vector<double>& y, const SphereRule& rule,
                       double tol = 1e-10);

/// The first summand of the M = -2k formula, which the theory makes
/// independent of w and p-shift: evaluated as a p-quadrature at one node
/// plus a second-node consistency check.
double negative_even_first_term(const RadonData& data,
                                const GaussianSuperFunction& phi,
                                const std::vector<double>& y,
                                const SphereRule& rule);

/// Fully symbolic fermionic inversion (m = 0): recovers phi exactly.
GrassmannExact invert_fermionic(const GrassmannExact& phi, int n);

struct BackprojectionPair {
  GrassmannNum lhs, rhs;
};
/// R*R[phi](x) against 2^M pi^{M-1} (K^M_{M-1} * phi)(x); the right side
/// uses the normalized-delta value when M = 1 and radial convolution
/// quadrature in the purely bosonic cases.
BackprojectionPair backprojection_identity(const GaussianSuperFunction& phi,
                                           const std::vector<double>& x,
                                           const SphereRule& rule,
                                           double tol = 1e-8);

/// CSV rows "subset,node,p,value".
void export_radon_csv(const RadonData& data, const SphereRule& rule,
                      const std::vector<double>& p_samples, std::ostream& os);

}  // namespace superspace
