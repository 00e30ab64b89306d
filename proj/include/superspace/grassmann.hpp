#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "superspace/scalar.hpp"

namespace superspace {

/// Sign of reordering the concatenated word (A ascending)(B ascending)
/// into a single ascending word; A and B must be disjoint bitmasks.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inv = 0;
  for (std::uint32_t rest = b; rest;) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inv += std::popcount(a >> (bit + 1));  // elements of A above this one
  }
  return (inv & 1) ? -1 : 1;
}

/// Parity sign picked up by a left derivative with respect to generator
/// `g` acting on the monomial `mask` (g must be set in mask).
inline int left_derivative_sign(std::uint32_t mask, int g) {
  const std::uint32_t below = mask & ((std::uint32_t{1} << g) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

namespace detail {
template <class C>
inline C pi_int_power(int k) {
  return C(std::pow(M_PI, k));
}
template <>
inline Scalar pi_int_power<Scalar>(int k) {
  return Scalar::pi_power(1, k);
}
template <>
inline std::complex<double> pi_int_power<std::complex<double>>(int k) {
  return {std::pow(M_PI, k), 0.0};
}
template <class C>
inline bool coeff_is_zero(const C& c) {
  return c == C(0);
}
inline bool coeff_is_zero(const Scalar& c) { return c.is_zero(); }
template <class C>
inline C from_rational(const Rational& r) {
  return C(static_cast<double>(r));
}
template <>
inline Scalar from_rational<Scalar>(const Rational& r) {
  return Scalar(r);
}
}  // namespace detail

/// Element of the Grassmann algebra on `ng` anticommuting generators,
/// with coefficients in C (exact Scalar, double or complex<double>).
/// Terms are stored on canonical ascending monomials keyed by bitmask.
template <class C>
class Grassmann {
 public:
  explicit Grassmann(int ng = 0) : ng_(ng) {
    if (ng < 0 || ng > 30) throw std::domain_error("bad generator count");
  }
  static Grassmann one(int ng) {
    Grassmann g(ng);
    g.terms_[0] = C(1);
    return g;
  }
  static Grassmann generator(int ng, int i) {
    Grassmann g(ng);
    g.terms_[std::uint32_t{1} << i] = C(1);
    return g;
  }
  static Grassmann monomial(int ng, std::uint32_t mask, C coeff) {
    Grassmann g(ng);
    if (!detail::coeff_is_zero(coeff)) g.terms_[mask] = std::move(coeff);
    return g;
  }

  int generators() const { return ng_; }
  const std::map<std::uint32_t, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? C(0) : it->second;
  }

  Grassmann& operator+=(const Grassmann& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Grassmann& operator-=(const Grassmann& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, C(-1) * c);
    return *this;
  }
  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  Grassmann operator-() const {
    Grassmann r(ng_);
    for (const auto& [m, c] : terms_) r.terms_[m] = C(-1) * c;
    return r;
  }

  Grassmann operator*(const Grassmann& o) const {
    check(o);
    Grassmann r(ng_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        if (ma & mb) continue;  // a repeated generator squares to zero
        const int s = merge_sign(ma, mb);
        r.add_term(ma | mb, (s < 0 ? C(-1) * ca : ca) * cb);
      }
    return r;
  }
  Grassmann& operator*=(const Grassmann& o) { return *this = *this * o; }

  Grassmann scaled(const C& c) const {
    Grassmann r(ng_);
    if (detail::coeff_is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
  }

  bool operator==(const Grassmann& o) const {
    return ng_ == o.ng_ && terms_ == o.terms_;
  }

  Grassmann pow(int k) const {
    Grassmann r = one(ng_);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Left derivative with respect to generator i.
  Grassmann derivative(int i) const {
    Grassmann r(ng_);
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (const auto& [m, c] : terms_) {
      if (!(m & bit)) continue;
      const int s = left_derivative_sign(m, i);
      r.add_term(m & ~bit, s < 0 ? C(-1) * c : c);
    }
    return r;
  }

  /// Berezin integral over the contiguous generator block
  /// [first, first + 2k): pi^{-k} d_{first+2k-1} ... d_{first}; only
  /// terms saturating the block survive. The result keeps the remaining
  /// generators at their original indices.
  Grassmann berezin_block(int first, int count) const {
    if (count % 2 != 0) throw std::domain_error("odd Berezin block");
    const int k = count / 2;
    const std::uint32_t block = ((std::uint32_t{1} << count) - 1) << first;
    const C pref = detail::pi_int_power<C>(-k);
    Grassmann r(ng_);
    for (const auto& [m, c] : terms_) {
      if ((m & block) != block) continue;
      const std::uint32_t rest = m & ~block;
      // Reorder x`_mask into x`_{block} x`_{rest}; derivatives then strip
      // the block in ascending order with no further sign.
      const int s = merge_sign(block, rest);
      r.add_term(rest, (s < 0 ? C(-1) * c : c) * pref);
    }
    return r;
  }

  /// Berezin integral over all generators (ng must be even): the Scalar
  /// value pi^{-ng/2} times the top coefficient.
  C berezin_full() const {
    Grassmann r = berezin_block(0, ng_);
    return r.coefficient(0);
  }

  /// Grassmann parity: +1 even, -1 odd; requires homogeneous parity.
  int parity() const {
    int p = 2;
    for (const auto& [m, c] : terms_) {
      const int q = std::popcount(m) & 1;
      if (p == 2)
        p = q;
      else if (p != q)
        throw std::domain_error("mixed-parity Grassmann element");
    }
    return p == 1 ? -1 : 1;
  }

 private:
  void check(const Grassmann& o) const {
    if (ng_ != o.ng_) throw std::domain_error("Grassmann dimension mismatch");
  }
  void add_term(std::uint32_t m, const C& c) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    } else if (detail::coeff_is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  int ng_ = 0;
  std::map<std::uint32_t, C> terms_;
};

using GrassmannExact = Grassmann<Scalar>;
using GrassmannNum = Grassmann<double>;
using GrassmannCx = Grassmann<std::complex<double>>;

/// The symplectic pairing of two blocks of fermionic generators:
/// <a`, b`> = -1/2 sum_j (a`_{2j-1} b`_{2j} - a`_{2j} b`_{2j-1}),
/// built inside a joint algebra; `a0`/`b0` are the 0-based offsets of the
/// two blocks of 2n generators each.
template <class C>
Grassmann<C> fermionic_pairing(int ng, int a0, int b0, int n) {
  Grassmann<C> r(ng);
  const C half = detail::from_rational<C>(Rational(1, 2));
  for (int j = 0; j < n; ++j) {
    auto t1 = Grassmann<C>::generator(ng, a0 + 2 * j) *
              Grassmann<C>::generator(ng, b0 + 2 * j + 1);
    auto t2 = Grassmann<C>::generator(ng, a0 + 2 * j + 1) *
              Grassmann<C>::generator(ng, b0 + 2 * j);
    r += (t2 - t1).scaled(half);
  }
  return r;
}

/// x`^2 for a block of 2n generators starting at `first`:
/// sum_j x`_{2j-1} x`_{2j} (the square of the fermionic supervector).
template <class C>
Grassmann<C> fermionic_norm_squared(int ng, int first, int n) {
  Grassmann<C> r(ng);
  for (int j = 0; j < n; ++j)
    r += Grassmann<C>::generator(ng, first + 2 * j) *
         Grassmann<C>::generator(ng, first + 2 * j + 1);
  return r;
}

}  // namespace superspace
