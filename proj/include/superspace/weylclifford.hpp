#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "superspace/superpoly.hpp"

namespace superspace {

struct WCKey {
  std::uint32_t emask = 0;           // bosonic Clifford subset, ascending
  std::vector<std::uint16_t> fpow;   // fermionic generator powers (size 2n)
  auto operator<=>(const WCKey&) const = default;
};

/// Element of the super Clifford algebra C_{m,2n} with SuperPolynomial
/// coefficients, kept in normal order: e_{j1}..e_{jk} (ascending) times
/// eg_1^{b1}..eg_{2n}^{b_{2n}}. Rewrite rules:
///   e_j e_k + e_k e_j = -2 delta_{jk}
///   e_j eg_k + eg_k e_j = 0
///   eg_j eg_k - eg_k eg_j = g_{jk},  g_{2j-1,2k} = delta_{jk} = -g_{2k,2j-1}
/// Coefficients commute with the generators.
class WeylClifford {
 public:
  WeylClifford() = default;
  explicit WeylClifford(Dims d, int degree_cap = 16)
      : dims_(d), cap_(degree_cap) {}

  static WeylClifford from_scalar(Dims d, const SuperPolynomial& f);
  static WeylClifford basis_e(Dims d, int j);  // bosonic generator e_{j+1}
  static WeylClifford basis_f(Dims d, int i);  // fermionic generator eg_{i+1}

  Dims dims() const { return dims_; }
  const std::map<WCKey, SuperPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeylClifford& operator+=(const WeylClifford& o);
  WeylClifford& operator-=(const WeylClifford& o);
  friend WeylClifford operator+(WeylClifford a, const WeylClifford& b) {
    return a += b;
  }
  friend WeylClifford operator-(WeylClifford a, const WeylClifford& b) {
    return a -= b;
  }
  WeylClifford operator-() const;
  WeylClifford operator*(const WeylClifford& o) const;
  WeylClifford scaled(const Scalar& c) const;
  WeylClifford scaled(const SuperPolynomial& f) const;   // coeff * f
  WeylClifford left_scaled(const SuperPolynomial& f) const;  // f * coeff
  bool operator==(const WeylClifford& o) const {
    return dims_ == o.dims_ && terms_ == o.terms_;
  }

  /// Coefficient of the identity basis element.
  SuperPolynomial scalar_part() const;
  /// True if only the identity basis element carries a coefficient.
  bool is_scalar() const;

  void add_term(const WCKey& k, const SuperPolynomial& f);

 private:
  void check(const WeylClifford& o) const;

  Dims dims_;
  int cap_ = 16;
  std::map<WCKey, SuperPolynomial> terms_;
};

/// Left super Dirac operator d_x = d_{x`} - d_{ux} applied to a
/// superpolynomial (Clifford-valued result) or to a Clifford-valued
/// polynomial (generators multiply from the left).
WeylClifford dirac_left(const SuperPolynomial& f, Dims d);
WeylClifford dirac_left(const WeylClifford& g);

/// Right super Dirac operator [.] d_x = -[.] d_{x`} - [.] d_{ux};
/// generators multiply from the right.
WeylClifford dirac_right(const SuperPolynomial& f, Dims d);
WeylClifford dirac_right(const WeylClifford& g);

/// Left multiplication by the supervector x = sum x_j e_j + sum x`_i eg_i.
WeylClifford x_mult(const SuperPolynomial& f, Dims d);
WeylClifford x_mult(const WeylClifford& g);

}  // namespace superspace
