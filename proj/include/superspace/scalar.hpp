#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace superspace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Rising factorial a(a+1)...(a+j-1); j = 0 gives 1.
Rational rising(const Rational& a, int j);

/// Falling factorial a(a-1)...(a-j+1); j = 0 gives 1.
Rational falling(const Rational& a, int j);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational double_factorial(int n);  // n!! with (-1)!! = 0!! = 1

/// Exact scalar of the form sum_q c_q * pi^(q/2) with rational c_q and
/// integer q. Closed under +, -, * and under division by single-term
/// scalars, which is all the formulas in use require.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v);  // NOLINT: implicit by design, mirrors numeric literals
  Scalar(const Rational& v);
  static Scalar pi_half_power(const Rational& coeff, int q);
  static Scalar pi_power(const Rational& coeff, int q) {
    return pi_half_power(coeff, 2 * q);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool single_term() const { return terms_.size() == 1; }
  /// Rational part (coefficient of pi^0); exact.
  Rational rational_part() const;
  const std::map<int, Rational>& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; only defined for single-term scalars.
  Scalar reciprocal() const;

  /// Float rendering, used only at the quadrature boundary.
  double to_double() const;

  /// Canonical text form, e.g. "4 * pi^1", "4/3 * pi^1", "1/2 * pi^(1/2)".
  std::string str() const;

 private:
  void prune();
  std::map<int, Rational> terms_;  // pi_half_power -> coefficient
};

/// Gamma(a) for positive integers and all half-integers, as an exact
/// Scalar (rational, or rational * pi^(1/2)). Throws on poles and on
/// other arguments.
Scalar gamma_exact(const Rational& a);

/// 1/Gamma(a) for integer and half-integer a; exact, and exactly zero at
/// the poles a in {0, -1, -2, ...}.
Scalar gamma_reciprocal_exact(const Rational& a);

/// Gamma(a + j) / Gamma(a) as an exact rational (telescoping product),
/// valid for any rational a and j >= 0.
Rational gamma_ratio(const Rational& a, int j);

/// Surface area of the supersphere: sigma_M = 2 pi^(M/2) / Gamma(M/2).
/// Exactly zero when M is a non-positive even integer.
Scalar sigma_M(int M);

}  // namespace superspace
