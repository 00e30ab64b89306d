#include "superspace/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace superspace {

SuperPolynomial SuperPolynomial::constant(int nb, int nf, Scalar c) {
  SuperPolynomial p(nb, nf);
  p.add_term(SPKey{std::vector<std::uint16_t>(nb, 0), 0}, c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(int nb, int nf, int j, int power) {
  SuperPolynomial p(nb, nf);
  SPKey k{std::vector<std::uint16_t>(nb, 0), 0};
  k.be[j] = static_cast<std::uint16_t>(power);
  p.add_term(std::move(k), Scalar(1));
  return p;
}

SuperPolynomial SuperPolynomial::fermion(int nb, int nf, int i) {
  SuperPolynomial p(nb, nf);
  p.add_term(SPKey{std::vector<std::uint16_t>(nb, 0), std::uint32_t{1} << i},
             Scalar(1));
  return p;
}

SuperPolynomial SuperPolynomial::monomial(int nb, int nf,
                                          std::vector<std::uint16_t> be,
                                          std::uint32_t fmask, Scalar c) {
  SuperPolynomial p(nb, nf);
  p.add_term(SPKey{std::move(be), fmask}, c);
  return p;
}

Scalar SuperPolynomial::coefficient(const SPKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar SuperPolynomial::body_at_zero() const {
  return coefficient(SPKey{std::vector<std::uint16_t>(nb_, 0), 0});
}

void SuperPolynomial::add_term(SPKey k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperPolynomial::check(const SuperPolynomial& o) const {
  if (nb_ != o.nb_ || nf_ != o.nf_)
    throw std::domain_error("superpolynomial dimension mismatch");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(nb_, nf_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& o) const {
  check(o);
  SuperPolynomial r(nb_, nf_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      if (ka.fmask & kb.fmask) continue;
      SPKey k{ka.be, ka.fmask | kb.fmask};
      for (int j = 0; j < nb_; ++j)
        k.be[j] = static_cast<std::uint16_t>(k.be[j] + kb.be[j]);
      Scalar c = ca * cb;
      if (merge_sign(ka.fmask, kb.fmask) < 0) c = -c;
      r.add_term(std::move(k), c);
    }
  return r;
}

SuperPolynomial SuperPolynomial::scaled(const Scalar& c) const {
  SuperPolynomial r(nb_, nf_);
  if (c.is_zero()) return r;
  for (const auto& [k, a] : terms_) r.add_term(k, a * c);
  return r;
}

SuperPolynomial SuperPolynomial::pow(int k) const {
  SuperPolynomial r = constant(nb_, nf_, Scalar(1));
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

SuperPolynomial SuperPolynomial::fderiv(int i) const {
  SuperPolynomial r(nb_, nf_);
  const std::uint32_t bit = std::uint32_t{1} << i;
  for (const auto& [k, c] : terms_) {
    if (!(k.fmask & bit)) continue;
    const int s = left_derivative_sign(k.fmask, i);
    r.add_term(SPKey{k.be, k.fmask & ~bit}, s < 0 ? -c : c);
  }
  return r;
}

SuperPolynomial SuperPolynomial::fderiv_right(int i) const {
  SuperPolynomial r(nb_, nf_);
  const std::uint32_t bit = std::uint32_t{1} << i;
  for (const auto& [k, c] : terms_) {
    if (!(k.fmask & bit)) continue;
    const int above = std::popcount(k.fmask >> (i + 1));
    r.add_term(SPKey{k.be, k.fmask & ~bit}, (above & 1) ? -c : c);
  }
  return r;
}

SuperPolynomial SuperPolynomial::bderiv(int j) const {
  SuperPolynomial r(nb_, nf_);
  for (const auto& [k, c] : terms_) {
    if (k.be[j] == 0) continue;
    SPKey kk = k;
    kk.be[j] -= 1;
    r.add_term(std::move(kk), c * Scalar(Rational(k.be[j])));
  }
  return r;
}

int SuperPolynomial::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int t = std::popcount(k.fmask);
    t = std::accumulate(k.be.begin(), k.be.end(), t);
    d = std::max(d, t);
  }
  return d;
}

bool SuperPolynomial::is_homogeneous(int* dout) const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int t = std::popcount(k.fmask);
    t = std::accumulate(k.be.begin(), k.be.end(), t);
    if (d == -1)
      d = t;
    else if (d != t)
      return false;
  }
  if (dout) *dout = d;
  return true;
}

bool SuperPolynomial::is_even() const {
  for (const auto& [k, c] : terms_)
    if (std::popcount(k.fmask) & 1) return false;
  return true;
}

SuperPolynomial SuperPolynomial::eval_zero_block(int b0, int b1, int f0,
                                                 int f1) const {
  SuperPolynomial r(nb_, nf_);
  std::uint32_t fblock = 0;
  for (int i = f0; i < f1; ++i) fblock |= std::uint32_t{1} << i;
  for (const auto& [k, c] : terms_) {
    if (k.fmask & fblock) continue;
    bool keep = true;
    for (int j = b0; j < b1 && keep; ++j) keep = (k.be[j] == 0);
    if (keep) r.add_term(k, c);
  }
  return r;
}

double SuperPolynomial::eval_bosonic(const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& [k, c] : terms_) {
    if (k.fmask != 0) continue;
    double t = c.to_double();
    for (int j = 0; j < nb_; ++j)
      for (int e = 0; e < k.be[j]; ++e) t *= x[j];
    v += t;
  }
  return v;
}

std::map<std::uint32_t, std::map<std::vector<std::uint16_t>, Scalar>>
SuperPolynomial::by_fermionic_subset() const {
  std::map<std::uint32_t, std::map<std::vector<std::uint16_t>, Scalar>> r;
  for (const auto& [k, c] : terms_) r[k.fmask][k.be] = c;
  return r;
}

std::string SuperPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool plain = c.is_rational();
    os << (plain ? c.str() : "(" + c.str() + ")");
    for (int j = 0; j < nb_; ++j) {
      if (k.be[j] == 0) continue;
      os << "*x" << (j + 1);
      if (k.be[j] > 1) os << "^" << k.be[j];
    }
    for (int i = 0; i < nf_; ++i)
      if (k.fmask & (std::uint32_t{1} << i)) os << "*xf" << (i + 1);
  }
  return os.str();
}

SuperPolynomial norm_squared(Dims d) {
  SuperPolynomial r(d.m, d.nf());
  for (int j = 0; j < d.m; ++j)
    r += SuperPolynomial::variable(d.m, d.nf(), j, 2);
  for (int a = 0; a < d.n; ++a)
    r -= SuperPolynomial::fermion(d.m, d.nf(), 2 * a) *
         SuperPolynomial::fermion(d.m, d.nf(), 2 * a + 1);
  return r;
}

SuperPolynomial supervector_even_power(Dims d, int two_ell) {
  if (two_ell % 2 != 0) throw std::domain_error("odd supervector power");
  const int ell = two_ell / 2;
  SuperPolynomial r = (-norm_squared(d)).pow(ell);
  return r;
}

SuperPolynomial laplacian_block(const SuperPolynomial& f, int b0, int b1,
                                int p0, int p1) {
  SuperPolynomial r(f.nb(), f.nf());
  for (int j = b0; j < b1; ++j) r += f.bderiv(j).bderiv(j);
  for (int a = p0; a < p1; ++a) {
    // -4 d_{2a} d_{2a+1}, rightmost derivative acting first
    r -= f.fderiv(2 * a + 1).fderiv(2 * a).scaled(Scalar(4));
  }
  return r;
}

SuperPolynomial euler_block(const SuperPolynomial& f, int b0, int b1, int f0,
                            int f1) {
  SuperPolynomial r(f.nb(), f.nf());
  std::uint32_t fblock = 0;
  for (int i = f0; i < f1; ++i) fblock |= std::uint32_t{1} << i;
  for (const auto& [k, c] : f.terms()) {
    int deg = std::popcount(k.fmask & fblock);
    for (int j = b0; j < b1; ++j) deg += k.be[j];
    if (deg != 0)
      r += SuperPolynomial::monomial(f.nb(), f.nf(), k.be, k.fmask,
                                     c * Scalar(deg));
  }
  return r;
}

namespace {
void enum_rec(int nb, int nf, int maxdeg, int var, SPKey& key,
              std::vector<SuperPolynomial>& out) {
  if (var == nb) {
    int used = 0;
    for (auto e : key.be) used += e;
    const std::uint32_t top = std::uint32_t{1} << nf;
    for (std::uint32_t fm = 0; fm < top; ++fm) {
      if (used + std::popcount(fm) > maxdeg) continue;
      key.fmask = fm;
      out.push_back(SuperPolynomial::monomial(nb, nf, key.be, fm, Scalar(1)));
    }
    key.fmask = 0;
    return;
  }
  int used = 0;
  for (auto e : key.be) used += e;
  for (int e = 0; used + e <= maxdeg; ++e) {
    key.be[var] = static_cast<std::uint16_t>(e);
    enum_rec(nb, nf, maxdeg, var + 1, key, out);
  }
  key.be[var] = 0;
}
}  // namespace

std::vector<SuperPolynomial> enumerate_monomials(int nb, int nf, int maxdeg) {
  std::vector<SuperPolynomial> out;
  SPKey key{std::vector<std::uint16_t>(nb, 0), 0};
  enum_rec(nb, nf, maxdeg, 0, key, out);
  return out;
}

SuperPolynomial random_superpolynomial(std::mt19937_64& rng, int nb, int nf,
                                       int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> expo(0, maxdeg);
  SuperPolynomial r(nb, nf);
  for (int t = 0; t < nterms; ++t) {
    SPKey k{std::vector<std::uint16_t>(nb, 0), 0};
    int budget = maxdeg;
    for (int j = 0; j < nb; ++j) {
      const int e = expo(rng) % (budget + 1);
      k.be[j] = static_cast<std::uint16_t>(e);
      budget -= e;
    }
    for (int i = 0; i < nf && budget > 0; ++i) {
      if (rng() & 1) {
        k.fmask |= std::uint32_t{1} << i;
        --budget;
      }
    }
    const int c = coeff(rng);
    if (c != 0) r += SuperPolynomial::monomial(nb, nf, k.be, k.fmask, Scalar(c));
  }
  return r;
}

GrassmannExact to_grassmann(const SuperPolynomial& f) {
  GrassmannExact g(f.nf());
  for (const auto& [k, c] : f.terms()) {
    for (auto e : k.be)
      if (e != 0) throw std::domain_error("bosonic content in to_grassmann");
    g += GrassmannExact::monomial(f.nf(), k.fmask, c);
  }
  return g;
}

SuperPolynomial from_grassmann(const GrassmannExact& g, int nb) {
  SuperPolynomial f(nb, g.generators());
  for (const auto& [m, c] : g.terms())
    f += SuperPolynomial::monomial(nb, g.generators(),
                                   std::vector<std::uint16_t>(nb, 0), m, c);
  return f;
}

SuperPolynomial embed(const SuperPolynomial& p, int nb_total, int nf_total,
                      int b_offset, int f_offset) {
  SuperPolynomial r(nb_total, nf_total);
  for (const auto& [k, c] : p.terms()) {
    SPKey kk{std::vector<std::uint16_t>(nb_total, 0), k.fmask << f_offset};
    for (int j = 0; j < p.nb(); ++j) kk.be[b_offset + j] = k.be[j];
    r += SuperPolynomial::monomial(nb_total, nf_total, kk.be, kk.fmask, c);
  }
  return r;
}

SuperPolynomial inner_product_blocks(int nb_total, int nf_total, Dims d,
                                     int bx, int fx, int by, int fy) {
  SuperPolynomial r(nb_total, nf_total);
  for (int j = 0; j < d.m; ++j)
    r += SuperPolynomial::variable(nb_total, nf_total, bx + j) *
         SuperPolynomial::variable(nb_total, nf_total, by + j);
  const Scalar half(Rational(1, 2));
  for (int a = 0; a < d.n; ++a) {
    auto t1 = SuperPolynomial::fermion(nb_total, nf_total, fx + 2 * a) *
              SuperPolynomial::fermion(nb_total, nf_total, fy + 2 * a + 1);
    auto t2 = SuperPolynomial::fermion(nb_total, nf_total, fx + 2 * a + 1) *
              SuperPolynomial::fermion(nb_total, nf_total, fy + 2 * a);
    r += (t2 - t1).scaled(half);
  }
  return r;
}

}  // namespace superspace
