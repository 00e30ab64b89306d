#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "superspace/scalar.hpp"

namespace superspace {

/// Smooth rapidly decreasing test function with derivative evaluators.
/// `parity` (+1 even, -1 odd, 0 unknown) lets regularized pairings treat
/// the vanishing derivatives at 0 as exact zeros.
class TestFunction1D {
 public:
  using Evaluator = std::function<double(int order, double t)>;

  TestFunction1D() = default;
  TestFunction1D(Evaluator ev, int parity = 0)
      : eval_(std::move(ev)), parity_(parity) {}

  /// P(t) * exp(-alpha (t-mu)^2 / 2) with closed-form derivatives.
  static TestFunction1D gauss_poly(std::vector<double> coeffs, double alpha,
                                   double mu);

  double operator()(double t) const { return eval_(0, t); }
  double deriv(int order, double t) const { return eval_(order, t); }
  int parity() const { return parity_; }
  bool deriv_at_zero_is_exact_zero(int order) const {
    return (parity_ == 1 && order % 2 == 1) ||
           (parity_ == -1 && order % 2 == 0);
  }

  TestFunction1D reflected() const;       // t -> phi(-t)
  TestFunction1D even_part_doubled() const;  // phi(t) + phi(-t)
  TestFunction1D odd_part_doubled() const;   // phi(t) - phi(-t)

 private:
  Evaluator eval_;
  int parity_ = 0;
};

enum class KernelFamily {
  t_plus,
  t_minus,
  abs_pow,
  sgn_abs_pow,
  delta_derivative,
};

/// 1-D generalized function t_+^l, t_-^l, |t|^l, sgn(t)|t|^l or
/// delta^{(l)}; lambda is kept rational so pole membership is exact.
struct Kernel1D {
  KernelFamily family = KernelFamily::t_plus;
  Rational lambda = 0;   // exponent, or unused for delta_derivative
  int delta_order = 0;   // order for delta_derivative
};

struct DeltaTermDescriptor {
  Rational coefficient;
  int order = 0;  // delta^{(order)}
};

/// Thrown when a pairing is requested exactly on a pole of the family;
/// carries the residue there.
struct PoleError : std::domain_error {
  PoleError(const std::string& what, DeltaTermDescriptor res)
      : std::domain_error(what), residue(res) {}
  DeltaTermDescriptor residue;
};

/// Residues of the four continued families at their poles:
/// t_+ and t_- at lambda = -l (l >= 1), |t| at lambda = -2l-1,
/// sgn|t| at lambda = -2l.
DeltaTermDescriptor residue_1d(KernelFamily family, int ell);

/// Analytic-continuation pairing <k, phi>. Adaptive quadrature with
/// absolute tolerance `tol`; exact boundary terms in closed form.
double pair_kernel_1d(const Kernel1D& k, const TestFunction1D& phi,
                      double tol = 1e-10);

/// Quadrature helpers shared by the weak-form modules.
double integrate_01(const std::function<double(double)>& f, double tol);
double integrate_1_inf(const std::function<double(double)>& f, double tol);
double integrate_0_inf(const std::function<double(double)>& f, double tol);
double integrate_R(const std::function<double(double)>& f, double tol);

}  // namespace superspace
