#include "superspace/weylclifford.hpp"

#include <bit>
#include <numeric>

namespace superspace {

namespace {

/// Product of two bosonic Clifford basis words (ascending index order,
/// metric e_j^2 = -1). Returns the resulting mask and sign.
std::pair<std::uint32_t, int> clifford_word_mul(std::uint32_t a,
                                                std::uint32_t b) {
  int sign = 1;
  std::uint32_t cur = a;
  for (std::uint32_t rest = b; rest;) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    const int above = std::popcount(cur >> (bit + 1));
    if (above & 1) sign = -sign;
    if (cur & (std::uint32_t{1} << bit)) {
      sign = -sign;  // e_b e_b = -1
      cur &= ~(std::uint32_t{1} << bit);
    } else {
      cur |= std::uint32_t{1} << bit;
    }
  }
  return {cur, sign};
}

/// Normal-ordered product of the fermionic (Weyl) parts. Per pair
/// (q, p) = (eg_{2a+1}, eg_{2a+2}) the relation qp - pq = 1 gives
///   (q^{i1} p^{j1})(q^{i2} p^{j2})
///     = sum_k (-1)^k k! C(j1,k) C(i2,k) q^{i1+i2-k} p^{j1+j2-k};
/// distinct pairs commute.
void weyl_word_mul(const std::vector<std::uint16_t>& b1,
                   const std::vector<std::uint16_t>& b2, int pair_count,
                   std::vector<std::pair<std::vector<std::uint16_t>, Rational>>&
                       out) {
  out.clear();
  out.push_back({std::vector<std::uint16_t>(b1.size(), 0), Rational(1)});
  for (int a = 0; a < pair_count; ++a) {
    const int i1 = b1[2 * a], j1 = b1[2 * a + 1];
    const int i2 = b2[2 * a], j2 = b2[2 * a + 1];
    std::vector<std::pair<std::vector<std::uint16_t>, Rational>> next;
    const int kmax = std::min(j1, i2);
    for (auto& [word, coef] : out) {
      for (int k = 0; k <= kmax; ++k) {
        Rational c = coef * binomial(j1, k) * binomial(i2, k) * factorial(k);
        if (k & 1) c = -c;
        auto w = word;
        w[2 * a] = static_cast<std::uint16_t>(i1 + i2 - k);
        w[2 * a + 1] = static_cast<std::uint16_t>(j1 + j2 - k);
        next.push_back({std::move(w), std::move(c)});
      }
    }
    out = std::move(next);
  }
}

int total_fpow(const std::vector<std::uint16_t>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

}  // namespace

WeylClifford WeylClifford::from_scalar(Dims d, const SuperPolynomial& f) {
  WeylClifford w(d);
  w.add_term(WCKey{0, std::vector<std::uint16_t>(d.nf(), 0)}, f);
  return w;
}

WeylClifford WeylClifford::basis_e(Dims d, int j) {
  WeylClifford w(d);
  w.add_term(WCKey{std::uint32_t{1} << j, std::vector<std::uint16_t>(d.nf(), 0)},
             SuperPolynomial::constant(d.m, d.nf(), Scalar(1)));
  return w;
}

WeylClifford WeylClifford::basis_f(Dims d, int i) {
  WCKey k{0, std::vector<std::uint16_t>(d.nf(), 0)};
  k.fpow[i] = 1;
  WeylClifford w(d);
  w.add_term(k, SuperPolynomial::constant(d.m, d.nf(), Scalar(1)));
  return w;
}

void WeylClifford::check(const WeylClifford& o) const {
  if (!(dims_ == o.dims_))
    throw std::domain_error("Clifford dimension mismatch");
}

void WeylClifford::add_term(const WCKey& k, const SuperPolynomial& f) {
  if (f.is_zero()) return;
  if (std::popcount(k.emask) + total_fpow(k.fpow) > cap_)
    throw std::runtime_error("Clifford degree cap exceeded");
  auto [it, fresh] = terms_.try_emplace(k, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylClifford& WeylClifford::operator+=(const WeylClifford& o) {
  check(o);
  for (const auto& [k, f] : o.terms_) add_term(k, f);
  return *this;
}

WeylClifford& WeylClifford::operator-=(const WeylClifford& o) {
  check(o);
  for (const auto& [k, f] : o.terms_) add_term(k, -f);
  return *this;
}

WeylClifford WeylClifford::operator-() const {
  WeylClifford r(dims_, cap_);
  for (const auto& [k, f] : terms_) r.terms_[k] = -f;
  return r;
}

WeylClifford WeylClifford::operator*(const WeylClifford& o) const {
  check(o);
  WeylClifford r(dims_, cap_);
  std::vector<std::pair<std::vector<std::uint16_t>, Rational>> fprods;
  for (const auto& [ka, fa] : terms_)
    for (const auto& [kb, fb] : o.terms_) {
      // e_{E2} moves left past the fermionic word of the first factor.
      int sign = (std::popcount(kb.emask) * total_fpow(ka.fpow)) & 1 ? -1 : 1;
      auto [emask, esign] = clifford_word_mul(ka.emask, kb.emask);
      sign *= esign;
      weyl_word_mul(ka.fpow, kb.fpow, dims_.n, fprods);
      const SuperPolynomial coeff = fa * fb;
      for (auto& [word, c] : fprods) {
        Scalar s(sign < 0 ? Rational(-c) : c);
        r.add_term(WCKey{emask, word}, coeff.scaled(s));
      }
    }
  return r;
}

WeylClifford WeylClifford::scaled(const Scalar& c) const {
  WeylClifford r(dims_, cap_);
  for (const auto& [k, f] : terms_) r.add_term(k, f.scaled(c));
  return r;
}

WeylClifford WeylClifford::scaled(const SuperPolynomial& g) const {
  WeylClifford r(dims_, cap_);
  for (const auto& [k, f] : terms_) r.add_term(k, f * g);
  return r;
}

WeylClifford WeylClifford::left_scaled(const SuperPolynomial& g) const {
  WeylClifford r(dims_, cap_);
  for (const auto& [k, f] : terms_) r.add_term(k, g * f);
  return r;
}

SuperPolynomial WeylClifford::scalar_part() const {
  const WCKey id{0, std::vector<std::uint16_t>(dims_.nf(), 0)};
  auto it = terms_.find(id);
  return it == terms_.end() ? SuperPolynomial(dims_.m, dims_.nf())
                            : it->second;
}

bool WeylClifford::is_scalar() const {
  const WCKey id{0, std::vector<std::uint16_t>(dims_.nf(), 0)};
  for (const auto& [k, f] : terms_)
    if (!(k == id)) return false;
  return true;
}

namespace {

/// The generator pieces of the left Dirac operator: a list of
/// (Clifford generator element, derivative action on coefficients).
struct DiracPiece {
  WeylClifford gen;
  int ferm_deriv = -1;  // fermionic generator index, or
  int bos_deriv = -1;   // bosonic variable index
  Scalar factor;
};

std::vector<DiracPiece> dirac_pieces(Dims d) {
  std::vector<DiracPiece> ps;
  for (int a = 0; a < d.n; ++a) {
    ps.push_back({WeylClifford::basis_f(d, 2 * a + 1), 2 * a, -1, Scalar(2)});
    ps.push_back({WeylClifford::basis_f(d, 2 * a), 2 * a + 1, -1, Scalar(-2)});
  }
  for (int j = 0; j < d.m; ++j)
    ps.push_back({WeylClifford::basis_e(d, j), -1, j, Scalar(-1)});
  return ps;
}

}  // namespace

WeylClifford dirac_left(const SuperPolynomial& f, Dims d) {
  return dirac_left(WeylClifford::from_scalar(d, f));
}

WeylClifford dirac_left(const WeylClifford& g) {
  const Dims d = g.dims();
  WeylClifford r(d);
  for (const auto& piece : dirac_pieces(d)) {
    WeylClifford dg(d);
    for (const auto& [k, f] : g.terms()) {
      const SuperPolynomial df =
          piece.ferm_deriv >= 0 ? f.fderiv(piece.ferm_deriv)
                                : f.bderiv(piece.bos_deriv);
      dg.add_term(k, df);
    }
    r += (piece.gen * dg).scaled(piece.factor);
  }
  return r;
}

WeylClifford dirac_right(const SuperPolynomial& f, Dims d) {
  return dirac_right(WeylClifford::from_scalar(d, f));
}

WeylClifford dirac_right(const WeylClifford& g) {
  // [.] d_x = -[.] d_{x`} - [.] d_{ux}: the coefficient takes a right
  // derivative and the operator generator is appended on the right of
  // the term's own basis word.
  const Dims d = g.dims();
  struct Piece {
    WeylClifford gen;
    int ferm = -1, bos = -1;
    Scalar factor;
  };
  std::vector<Piece> ps;
  for (int a = 0; a < d.n; ++a) {
    ps.push_back({WeylClifford::basis_f(d, 2 * a + 1), 2 * a, -1, Scalar(-2)});
    ps.push_back({WeylClifford::basis_f(d, 2 * a), 2 * a + 1, -1, Scalar(2)});
  }
  for (int j = 0; j < d.m; ++j)
    ps.push_back({WeylClifford::basis_e(d, j), -1, j, Scalar(-1)});

  WeylClifford r(d);
  for (const auto& p : ps) {
    WeylClifford dg(d);
    for (const auto& [k, f] : g.terms()) {
      const SuperPolynomial df =
          p.ferm >= 0 ? f.fderiv_right(p.ferm) : f.bderiv(p.bos);
      dg.add_term(k, df);
    }
    r += (dg * p.gen).scaled(p.factor);
  }
  return r;
}

WeylClifford x_mult(const SuperPolynomial& f, Dims d) {
  return x_mult(WeylClifford::from_scalar(d, f));
}

WeylClifford x_mult(const WeylClifford& g) {
  const Dims d = g.dims();
  WeylClifford r(d);
  for (int j = 0; j < d.m; ++j) {
    const auto xj = SuperPolynomial::variable(d.m, d.nf(), j);
    r += (WeylClifford::basis_e(d, j) * g).left_scaled(xj);
  }
  for (int i = 0; i < d.nf(); ++i) {
    // The variable x`_i multiplies the coefficients from the left; it
    // commutes with the Clifford generators but not with odd coefficients.
    const auto xi = SuperPolynomial::fermion(d.m, d.nf(), i);
    r += (WeylClifford::basis_f(d, i) * g).left_scaled(xi);
  }
  return r;
}

}  // namespace superspace
