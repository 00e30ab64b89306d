#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "superspace/grassmann.hpp"
#include "superspace/superpoly.hpp"

namespace superspace {

/// Dense-enough multivariate polynomial over doubles; the bosonic
/// coefficient class of the Gaussian test family.
class PolyND {
 public:
  PolyND() = default;
  explicit PolyND(int nvars) : nv_(nvars) {}
  static PolyND constant(int nv, double c);
  static PolyND variable(int nv, int j, int power = 1);

  int nvars() const { return nv_; }
  const std::map<std::vector<std::uint16_t>, double>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  PolyND& operator+=(const PolyND& o);
  PolyND& operator-=(const PolyND& o);
  friend PolyND operator+(PolyND a, const PolyND& b) { return a += b; }
  friend PolyND operator-(PolyND a, const PolyND& b) { return a -= b; }
  PolyND operator*(const PolyND& o) const;
  PolyND scaled(double c) const;
  PolyND deriv(int j) const;
  double eval(const std::vector<double>& x) const;

  /// Substitute x_j = c_j + sum_i A[j][i] s_i (new variable count = ns).
  PolyND substitute_affine(const std::vector<double>& c,
                           const std::vector<std::vector<double>>& A,
                           int ns) const;

  void add_term(std::vector<std::uint16_t> key, double c);

 private:
  int nv_ = 0;
  std::map<std::vector<std::uint16_t>, double> terms_;
};

/// Gaussian moments: Int s^k e^{-s^2/2} ds = sqrt(2 pi) (k-1)!! for even
/// k, 0 for odd k.
double gauss_moment(int k);

/// Test superfunction  phi = sum_A P_A(x) exp(-|x-c|^2/2) x`_A.
/// The family is closed under bosonic derivatives, polynomial
/// multiplication, translation, Fourier transform and Radon transform.
class GaussianSuperFunction {
 public:
  GaussianSuperFunction() = default;
  GaussianSuperFunction(Dims d, std::vector<double> center)
      : dims_(d), center_(std::move(center)) {}

  static GaussianSuperFunction gaussian(Dims d,
                                        std::vector<double> center = {});

  Dims dims() const { return dims_; }
  const std::vector<double>& center() const { return center_; }
  const std::map<std::uint32_t, PolyND>& parts() const { return parts_; }
  void set_part(std::uint32_t amask, PolyND p);

  /// Component value P_A(x) exp(-|x-c|^2/2).
  double component(std::uint32_t amask, const std::vector<double>& x) const;
  /// Value at a bosonic point with the fermionic generators symbolic.
  GrassmannNum value_at(const std::vector<double>& x) const;

  GaussianSuperFunction bderiv(int j) const;
  GaussianSuperFunction translated(const std::vector<double>& y) const;
  /// phi * q (the superpolynomial multiplies from the right).
  GaussianSuperFunction mul_superpoly(const SuperPolynomial& q) const;
  /// q * phi; differs from the above by Grassmann signs when both
  /// factors carry odd content.
  GaussianSuperFunction premul_superpoly(const SuperPolynomial& q) const;

  /// Integral over R^{m|2n} (Berezin included), in closed form.
  double super_integral() const;
  /// Closed-form bosonic integral of one component.
  double component_integral(std::uint32_t amask) const;

  /// Unnormalized bosonic Fourier integral of a component:
  /// Int e^{-i<x,xi>} P_A(x) e^{-|x-c|^2/2} dV.
  std::complex<double> component_fourier(std::uint32_t amask,
                                         const std::vector<double>& xi) const;

 private:
  Dims dims_;
  std::vector<double> center_;
  std::map<std::uint32_t, PolyND> parts_;
};

/// Named members of the built-in family used by the CLI and the drivers.
GaussianSuperFunction make_test_function(const std::string& name, Dims d);
std::vector<std::string> test_function_names();

}  // namespace superspace
