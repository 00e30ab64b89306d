#pragma once

#include "superspace/gaussfun.hpp"
#include "superspace/radon.hpp"

namespace superspace {

enum class PlaneWaveIdentity {
  PWRLan,       // |<x,w>|^lambda integral vs 2 |x|^lambda Gamma ratio
  PWDelRm_even, // delta(x) from <x,w>^{-m}, m even
  PWDelRm_odd,  // delta(x) from delta^{(m-1)}(<x,w>), m odd
};

struct PlaneWaveIdentityCase {
  int m = 2;
  PlaneWaveIdentity id = PlaneWaveIdentity::PWRLan;
  Rational lambda = 1;  // used by PWRLan
};

struct WeakPairResult {
  double lhs = 0.0, rhs = 0.0;
  double rel_err() const {
    const double s = std::max(std::abs(lhs), std::abs(rhs));
    return s > 0 ? std::abs(lhs - rhs) / s : 0.0;
  }
};

/// Both sides of the identity paired weakly against a Gaussian-class
/// test function: the left side via sphere quadrature of 1-D pairings
/// against the Radon profiles, the right side via the radial pairing or
/// the point value of phi.
WeakPairResult verify_pw_identity(const PlaneWaveIdentityCase& c,
                                  const GaussianSuperFunction& phi,
                                  const SphereRule& rule, double tol = 1e-10);

/// Scalar-part boundary value of the bosonic Cauchy kernel: pairing of
/// phi_1^{m+1|0}(x0, .) - phi_1^{m+1|0}(-x0, .) against phi, Richardson
/// extrapolated to x0 -> 0+; the limit is -phi(0).
double cauchy_boundary_check(int m, const GaussianSuperFunction& phi,
                             const std::vector<double>& x0_seq,
                             const SphereRule& rule, double tol = 1e-10);

/// Paired boundary value of the nu-kernels (even fundamental solutions):
/// identically zero by symmetry; returns the paired difference at x0.
double nu_kernel_boundary_pair(int m, int j, const GaussianSuperFunction& phi,
                               double x0, const SphereRule& rule,
                               double tol = 1e-10);

/// Paired boundary value of phi_{2j+1}^{m+1|0}; tends to 0 as x0 -> 0+.
double phi_kernel_boundary_pair(int m, int j, const GaussianSuperFunction& phi,
                                double x0, const SphereRule& rule,
                                double tol = 1e-10);

/// Appendix layer moments, exact: Int_0^inf delta^{(j)}(1-r^2) r^{2j-1} dr
/// = 1/2 for j = 0 and 0 for j >= 1; with an extra ln(r) the value is
/// (j-1)!/4 for j >= 1.
Rational layer_moment_exact(int j);
Rational log_layer_moment_exact(int j);

}  // namespace superspace
