#include "superspace/operators.hpp"

namespace superspace {

SuperPolynomial apply(const OperatorDescriptor& op, const SuperPolynomial& f) {
  const Dims d = op.dims;
  switch (op.kind) {
    case OpKind::partial_bosonic:
      return f.bderiv(op.index);
    case OpKind::partial_fermionic:
      return f.fderiv(op.index);
    case OpKind::euler:
      return euler_block(f, 0, d.m, 0, d.nf());
    case OpKind::laplacian_bosonic:
      return laplacian_block(f, 0, d.m, 0, 0);
    case OpKind::laplacian_fermionic:
      return laplacian_block(f, 0, 0, 0, d.n);
    case OpKind::laplacian_super:
      return laplacian_block(f, 0, d.m, 0, d.n);
    case OpKind::dirac_left:
      throw std::domain_error("dirac_left is Clifford-valued");
  }
  throw std::logic_error("unreachable");
}

SuperPolynomial laplacian(const SuperPolynomial& f, Dims d) {
  return laplacian_block(f, 0, d.m, 0, d.n);
}

SuperPolynomial euler(const SuperPolynomial& f, Dims d) {
  return euler_block(f, 0, d.m, 0, d.nf());
}

ScaledSuperPower laplacian_power_norm(Dims d, int j, int ell) {
  if (j > ell) return {Scalar(0), 0};
  Rational c = factorial(ell) / factorial(ell - j);
  // Gamma(M/2+l) / Gamma(M/2+l-j) as a falling product from M/2+l-1.
  c *= falling(Rational(d.M(), 2) + ell - 1, j);
  Rational four(1);
  for (int i = 0; i < j; ++i) four *= -4;
  return {Scalar(four * c), 2 * (ell - j)};
}

SuperPolynomial dirac_anticommutator_check(Dims d, const SuperPolynomial& f) {
  const WeylClifford g = WeylClifford::from_scalar(d, f);
  const WeylClifford lhs = dirac_left(x_mult(g)) + x_mult(dirac_left(g));
  if (!lhs.is_scalar())
    throw std::logic_error("anticommutator produced non-scalar part");
  return lhs.scalar_part();
}

}  // namespace superspace
