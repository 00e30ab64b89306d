#pragma once

#include <functional>
#include <map>
#include <vector>

#include "superspace/superpoly.hpp"

namespace superspace {

/// Finite expansion sum_j c_{j,mu} x`^{2j} |ux|^{mu} (x`^{2j} the even
/// fermionic supervector power, |ux| the bosonic norm); exponents are
/// rational so poles are detected exactly.
class RadialSuperExpansion {
 public:
  explicit RadialSuperExpansion(Dims d = {}) : dims_(d) {}

  Dims dims() const { return dims_; }
  const std::map<std::pair<int, Rational>, Scalar>& terms() const {
    return terms_;
  }
  void add(int j, const Rational& mu, const Scalar& c);
  Scalar coefficient(int j, const Rational& mu) const;
  bool operator==(const RadialSuperExpansion& o) const {
    return dims_ == o.dims_ && terms_ == o.terms_;
  }
  RadialSuperExpansion scaled(const Scalar& c) const;
  RadialSuperExpansion operator-(const RadialSuperExpansion& o) const;
  bool is_zero() const { return terms_.empty(); }

  /// Super Laplacian, term by term: the bosonic rule
  /// Delta |ux|^mu = mu (mu + m - 2) |ux|^{mu-2} away from poles, plus
  /// the closed fermionic action on x`^{2j}. Throws if a term would
  /// need distributional regularization.
  RadialSuperExpansion laplacian() const;

  /// Pointwise value at a bosonic point (fermionic part expanded):
  /// returns per fermionic power j the double value c * |x|^mu summed.
  std::map<int, double> eval_radial(double r) const;

 private:
  Dims dims_;
  std::map<std::pair<int, Rational>, Scalar> terms_;
};

/// |x|^lambda as the finite expansion of the super power: coefficient of
/// x`^{2j} |ux|^{lambda-2j} is Gamma(-lambda/2+j)/Gamma(-lambda/2) / j!.
RadialSuperExpansion super_power_expansion(Dims d, const Rational& lambda);

/// H_M(gamma) = 2^gamma pi^{M/2} Gamma(gamma/2) / Gamma((M-gamma)/2),
/// exact for integer gamma.
Scalar riesz_normalization(int M, const Rational& gamma);

struct RieszKernel {
  Dims dims;
  Rational gamma;
  Scalar normalization;            // H_M(gamma)
  RadialSuperExpansion expansion;  // of |x|^{gamma-M} (unnormalized)
};

/// K^M_gamma = |x|^{gamma-M} / H_M(gamma); requires +-gamma - M not in
/// 2N_0.
RieszKernel riesz_kernel(Dims d, const Rational& gamma);

/// (-Delta) K_gamma = K_{gamma-2}; the step is verified symbolically on
/// the expansions before returning the new kernel.
RieszKernel riesz_laplacian_step(const RieszKernel& k);

/// Theorem-style data for the residues of |x|^lambda at
/// lambda = -M - 2l and the normalized value there.
struct SuperNormResidue {
  Scalar residue_scalar;        // 2 pi^{M/2} / (2^{2l} l! Gamma(M/2+l))
  Scalar normalized_value;      // (-1)^l pi^{M/2} / (2^{2l} Gamma(M/2+l))
  /// Expansion of Delta_x^l delta(x): coefficient of
  /// x`^{2n-2j} Delta_ux^{l-j} delta(ux), j = 0..min(l,n).
  std::map<int, Scalar> delta_expansion;
};

/// Requires m != 0 (the purely fermionic case is not covered by the
/// residue theory). The result is cross-checked internally against the
/// bosonic-residue route through the |x|^lambda expansion.
SuperNormResidue super_norm_residue(Dims d, int ell);

/// sum_j binom(l,j) Gamma(s+l-j)/Gamma(s) Gamma(-s+j)/Gamma(-s),
/// evaluated by rising-factorial products; identically zero for l >= 1.
Rational chu_vandermonde_sum(int ell, const Rational& s);

/// Coefficients a_j = pi^n 4^j Gamma(s+j) / ((n-j)! Gamma(s)) of the
/// fundamental solution ansatz; the linear system they satisfy is
/// re-verified exactly before returning. Requires +-2s - M not in 2N_0.
std::vector<Scalar> frac_laplacian_fundamental_coeffs(Dims d,
                                                      const Rational& s);

/// The same coefficients and system residual as pure Gamma-ratio
/// identities in s, valid for every rational s (no kernel
/// interpretation, hence no excluded set). Returns true iff the system
/// residual vanishes for l = 1..n.
bool fundsol_coefficient_system_check(Dims d, const Rational& s);

/// Reassembly identity of the fundamental solution: the coefficient of
/// x`^{2j}|ux|^{2s-M-2j} in sum_j a_j (-Delta_ux)^{n-j} K^m_{2s+2n}
/// against (1/H_M(2s)) times the |x|^{2s-M} expansion. Compared in the
/// telescoped ratio form a_{n-j} H_M(2s)/H_m(2s+2n-2j), in which the
/// normalization poles cancel and the identity is regular for every s.
bool fundsol_reassembly_check(Dims d, const Rational& s);

/// G_l(x) = x^l/l! ln(x) - a_l x^l with a_0 = 0 and
/// a_{l+1} = (a_l + 1/(l+1)!) / (l+1); a_l = H_l / l!.
Rational log_primitive_coeff(int ell);
double log_primitive_eval(int ell, double x);

/// Finite Taylor composition F(a_1,..,a_k) for even arguments split as
/// rational bodies + nilpotent parts; `derivs` returns the mixed
/// derivative F^{(orders)} at the bodies.
SuperPolynomial taylor_compose(
    const std::function<Scalar(const std::vector<int>&)>& derivs,
    const std::vector<SuperPolynomial>& nilpotents, int n_pairs);

/// a^lambda for an even superpolynomial with constant body (exact when
/// the body is 1 or lambda is a non-negative integer).
SuperPolynomial generalized_power(const SuperPolynomial& a,
                                  const Rational& lambda);

/// delta^{(l)}(g) = sum_j g_nil^j / j! delta^{(l+j)}(g_0): the symbolic
/// nilpotent layers over a bosonic concentrated delta of rising order.
struct ConcentratedDeltaTerm {
  SuperPolynomial nilpotent_power;  // g_nil^j / j!
  int delta_order;                  // l + j
};
std::vector<ConcentratedDeltaTerm> concentrated_delta(
    const SuperPolynomial& nilpotent_part, int n_pairs, int ell);

}  // namespace superspace
