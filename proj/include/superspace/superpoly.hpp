#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "superspace/grassmann.hpp"
#include "superspace/scalar.hpp"

namespace superspace {

/// Bosonic dimension m and fermionic pair count n; the superdimension
/// M = m - 2n is always derived.
struct Dims {
  int m = 0;
  int n = 0;
  int M() const { return m - 2 * n; }
  int nf() const { return 2 * n; }
  bool operator==(const Dims&) const = default;
};

struct SPKey {
  std::vector<std::uint16_t> be;  // bosonic exponents, one per variable
  std::uint32_t fmask = 0;        // fermionic subset, canonical ascending
  auto operator<=>(const SPKey&) const = default;
};

/// Element of P = R[x_1..x_nb] (x) G_nf with exact Scalar coefficients.
/// The representation is canonical, so equality is map equality.
class SuperPolynomial {
 public:
  SuperPolynomial() = default;
  SuperPolynomial(int nb, int nf) : nb_(nb), nf_(nf) {}

  static SuperPolynomial constant(int nb, int nf, Scalar c);
  static SuperPolynomial variable(int nb, int nf, int j, int power = 1);
  static SuperPolynomial fermion(int nb, int nf, int i);
  static SuperPolynomial monomial(int nb, int nf, std::vector<std::uint16_t> be,
                                  std::uint32_t fmask, Scalar c);

  int nb() const { return nb_; }
  int nf() const { return nf_; }
  const std::map<SPKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const SPKey& k) const;
  /// Constant term (value at x = 0, x` = 0).
  Scalar body_at_zero() const;

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) {
    return a += b;
  }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) {
    return a -= b;
  }
  SuperPolynomial operator-() const;
  SuperPolynomial operator*(const SuperPolynomial& o) const;
  SuperPolynomial& operator*=(const SuperPolynomial& o) {
    return *this = *this * o;
  }
  SuperPolynomial scaled(const Scalar& c) const;
  SuperPolynomial pow(int k) const;
  bool operator==(const SuperPolynomial& o) const {
    return nb_ == o.nb_ && nf_ == o.nf_ && terms_ == o.terms_;
  }

  /// Left fermionic derivative d/dx`_i.
  SuperPolynomial fderiv(int i) const;
  /// Right fermionic derivative (acts from the right).
  SuperPolynomial fderiv_right(int i) const;
  SuperPolynomial bderiv(int j) const;

  /// Total degree of the highest term, -1 for zero.
  int degree() const;
  /// True when every monomial has the same total degree `d`.
  bool is_homogeneous(int* d = nullptr) const;
  /// True when all fermionic subsets have even (resp. odd) size.
  bool is_even() const;

  /// Keep only terms with no dependence on bosonic variables [b0,b1) and
  /// no fermionic generators in [f0,f1) (i.e. evaluate that block at 0).
  SuperPolynomial eval_zero_block(int b0, int b1, int f0, int f1) const;

  /// Multi-index derivative evaluated at zero, divided by alpha! --
  /// i.e. the coefficient extraction used by Taylor arguments.
  double eval_bosonic(const std::vector<double>& x) const;  // ferm part dropped
  /// Collect the bosonic polynomial attached to each fermionic subset.
  std::map<std::uint32_t, std::map<std::vector<std::uint16_t>, Scalar>>
  by_fermionic_subset() const;

  /// Canonical text form, deterministic term order.
  std::string str() const;

 private:
  void add_term(SPKey k, const Scalar& c);
  void check(const SuperPolynomial& o) const;

  int nb_ = 0, nf_ = 0;
  std::map<SPKey, Scalar> terms_;
  friend SuperPolynomial mul_impl(const SuperPolynomial&,
                                  const SuperPolynomial&);
};

/// |x|^2 = sum x_j^2 - sum x`_{2j-1} x`_{2j} over the given dims.
SuperPolynomial norm_squared(Dims d);
/// The supervector power x^{2l} = (-|x|^2)^l (an even superpolynomial).
SuperPolynomial supervector_even_power(Dims d, int two_ell);

/// Block operators on a joint algebra: bosonic Laplacian over variables
/// [b0,b1) and fermionic Laplacian over generator pairs [p0,p1)
/// (generators 2p .. 2p+1 per pair), with the convention
/// Delta_ferm = -4 sum_a d_{x`_{2a-1}} d_{x`_{2a}}.
SuperPolynomial laplacian_block(const SuperPolynomial& f, int b0, int b1,
                                int p0, int p1);
SuperPolynomial euler_block(const SuperPolynomial& f, int b0, int b1, int f0,
                            int f1);

/// All monomials (as superpolynomials) of total degree <= maxdeg.
std::vector<SuperPolynomial> enumerate_monomials(int nb, int nf, int maxdeg);

/// Deterministic random superpolynomial with small integer coefficients.
SuperPolynomial random_superpolynomial(std::mt19937_64& rng, int nb, int nf,
                                       int maxdeg, int nterms);

/// Conversions for purely fermionic content.
GrassmannExact to_grassmann(const SuperPolynomial& f);
SuperPolynomial from_grassmann(const GrassmannExact& g, int nb);

/// Re-index a superpolynomial into a larger joint algebra, shifting its
/// bosonic variables by b_offset and fermionic generators by f_offset.
SuperPolynomial embed(const SuperPolynomial& p, int nb_total, int nf_total,
                      int b_offset, int f_offset);

/// Inner product <x,y> of two supervector blocks inside a joint algebra:
/// sum_j x_j y_j - (1/2) sum_j (x`_{2j-1} y`_{2j} - x`_{2j} y`_{2j-1}).
SuperPolynomial inner_product_blocks(int nb_total, int nf_total, Dims d,
                                     int bx, int fx, int by, int fy);

}  // namespace superspace
