#pragma once

#include "superspace/superpoly.hpp"
#include "superspace/weylclifford.hpp"

namespace superspace {

enum class OpKind {
  partial_bosonic,
  partial_fermionic,
  euler,
  laplacian_bosonic,
  laplacian_fermionic,
  laplacian_super,
  dirac_left,
};

struct OperatorDescriptor {
  OpKind kind;
  Dims dims;
  int index = 0;  // variable index for the partial derivatives
};

/// Apply the operator to a superpolynomial over the full variable set.
/// dirac_left is not representable as a SuperPolynomial; use
/// dirac_left() from weylclifford.hpp for Clifford-valued results.
SuperPolynomial apply(const OperatorDescriptor& op, const SuperPolynomial& f);

SuperPolynomial laplacian(const SuperPolynomial& f, Dims d);
SuperPolynomial euler(const SuperPolynomial& f, Dims d);

/// Closed form of Delta^j [x^{2l}]: scalar factor
///   (-4)^j l!/(l-j)! Gamma(M/2+l)/Gamma(M/2+l-j)
/// (exact telescoping ratio, valid for every integer M) paired with the
/// monomial x^{2l-2j}; zero for j > l.
struct ScaledSuperPower {
  Scalar factor;
  int two_ell = 0;  // exponent of the surviving supervector power
};
ScaledSuperPower laplacian_power_norm(Dims d, int j, int ell);

/// (d_x x + x d_x)[F] computed through the Weyl-Clifford product. The
/// contract 2(E + M/2)[F] is what the tests assert against.
SuperPolynomial dirac_anticommutator_check(Dims d, const SuperPolynomial& f);

}  // namespace superspace
