#include "superspace/gaussfun.hpp"

#include <cmath>

namespace superspace {

PolyND PolyND::constant(int nv, double c) {
  PolyND p(nv);
  p.add_term(std::vector<std::uint16_t>(nv, 0), c);
  return p;
}

PolyND PolyND::variable(int nv, int j, int power) {
  PolyND p(nv);
  std::vector<std::uint16_t> k(nv, 0);
  k[j] = static_cast<std::uint16_t>(power);
  p.add_term(std::move(k), 1.0);
  return p;
}

void PolyND::add_term(std::vector<std::uint16_t> key, double c) {
  if (c == 0.0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int PolyND::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int t = 0;
    for (auto e : k) t += e;
    d = std::max(d, t);
  }
  return d;
}

PolyND& PolyND::operator+=(const PolyND& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyND& PolyND::operator-=(const PolyND& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PolyND PolyND::operator*(const PolyND& o) const {
  PolyND r(nv_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      auto k = ka;
      for (int j = 0; j < nv_; ++j)
        k[j] = static_cast<std::uint16_t>(k[j] + kb[j]);
      r.add_term(std::move(k), ca * cb);
    }
  return r;
}

PolyND PolyND::scaled(double c) const {
  PolyND r(nv_);
  for (const auto& [k, a] : terms_) r.add_term(k, a * c);
  return r;
}

PolyND PolyND::deriv(int j) const {
  PolyND r(nv_);
  for (const auto& [k, c] : terms_) {
    if (k[j] == 0) continue;
    auto kk = k;
    kk[j] -= 1;
    r.add_term(std::move(kk), c * k[j]);
  }
  return r;
}

double PolyND::eval(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) {
    double t = c;
    for (int j = 0; j < nv_; ++j)
      for (int e = 0; e < k[j]; ++e) t *= x[j];
    acc += t;
  }
  return acc;
}

PolyND PolyND::substitute_affine(const std::vector<double>& c,
                                 const std::vector<std::vector<double>>& A,
                                 int ns) const {
  // Precompute the affine images of each variable, then expand.
  std::vector<PolyND> image(nv_);
  for (int j = 0; j < nv_; ++j) {
    PolyND lin = PolyND::constant(ns, c[j]);
    for (int i = 0; i < ns; ++i)
      if (A[j][i] != 0.0) lin += PolyND::variable(ns, i).scaled(A[j][i]);
    image[j] = lin;
  }
  PolyND out(ns);
  for (const auto& [k, coeff] : terms_) {
    PolyND term = PolyND::constant(ns, coeff);
    for (int j = 0; j < nv_; ++j)
      for (int e = 0; e < k[j]; ++e) term = term * image[j];
    out += term;
  }
  return out;
}

double gauss_moment(int k) {
  if (k % 2 == 1) return 0.0;
  double v = std::sqrt(2.0 * M_PI);
  for (int i = k - 1; i > 1; i -= 2) v *= i;
  return v;
}

GaussianSuperFunction GaussianSuperFunction::gaussian(
    Dims d, std::vector<double> center) {
  if (center.empty()) center.assign(d.m, 0.0);
  GaussianSuperFunction f(d, std::move(center));
  f.set_part(0, PolyND::constant(d.m, 1.0));
  return f;
}

void GaussianSuperFunction::set_part(std::uint32_t amask, PolyND p) {
  if (p.is_zero())
    parts_.erase(amask);
  else
    parts_[amask] = std::move(p);
}

double GaussianSuperFunction::component(std::uint32_t amask,
                                        const std::vector<double>& x) const {
  auto it = parts_.find(amask);
  if (it == parts_.end()) return 0.0;
  double q = 0.0;
  for (int j = 0; j < dims_.m; ++j)
    q += (x[j] - center_[j]) * (x[j] - center_[j]);
  return it->second.eval(x) * std::exp(-q / 2.0);
}

GrassmannNum GaussianSuperFunction::value_at(
    const std::vector<double>& x) const {
  GrassmannNum g(dims_.nf());
  for (const auto& [amask, p] : parts_)
    g += GrassmannNum::monomial(dims_.nf(), amask, component(amask, x));
  return g;
}

GaussianSuperFunction GaussianSuperFunction::bderiv(int j) const {
  GaussianSuperFunction r(dims_, center_);
  for (const auto& [amask, p] : parts_) {
    PolyND q = p.deriv(j);
    q -= (PolyND::variable(dims_.m, j) -
          PolyND::constant(dims_.m, center_[j])) *
         p;
    r.set_part(amask, std::move(q));
  }
  return r;
}

GaussianSuperFunction GaussianSuperFunction::translated(
    const std::vector<double>& y) const {
  std::vector<double> c = center_;
  for (int j = 0; j < dims_.m; ++j) c[j] += y[j];
  GaussianSuperFunction r(dims_, c);
  // P_A(x) -> P_A(x - y)
  std::vector<std::vector<double>> eye(dims_.m,
                                       std::vector<double>(dims_.m, 0.0));
  for (int j = 0; j < dims_.m; ++j) eye[j][j] = 1.0;
  std::vector<double> shift(dims_.m);
  for (int j = 0; j < dims_.m; ++j) shift[j] = -y[j];
  for (const auto& [amask, p] : parts_)
    r.set_part(amask, p.substitute_affine(shift, eye, dims_.m));
  return r;
}

GaussianSuperFunction GaussianSuperFunction::mul_superpoly(
    const SuperPolynomial& q) const {
  GaussianSuperFunction r(dims_, center_);
  std::map<std::uint32_t, PolyND> acc;
  for (const auto& [amask, p] : parts_) {
    for (const auto& [k, c] : q.terms()) {
      if (amask & k.fmask) continue;
      // phi = P_A x`_A, q-term = c x^be x`_B: supercommutative reorder
      // only involves the Grassmann factors.
      const int sign = merge_sign(amask, k.fmask);
      PolyND mono = PolyND::constant(dims_.m, c.to_double() * sign);
      for (int j = 0; j < dims_.m; ++j)
        if (k.be[j] > 0) mono = mono * PolyND::variable(dims_.m, j, k.be[j]);
      auto [it, fresh] = acc.try_emplace(amask | k.fmask, mono * p);
      if (!fresh) it->second += mono * p;
    }
  }
  for (auto& [mask, p] : acc) r.set_part(mask, std::move(p));
  return r;
}

GaussianSuperFunction GaussianSuperFunction::premul_superpoly(
    const SuperPolynomial& q) const {
  GaussianSuperFunction r(dims_, center_);
  std::map<std::uint32_t, PolyND> acc;
  for (const auto& [amask, p] : parts_) {
    for (const auto& [k, c] : q.terms()) {
      if (amask & k.fmask) continue;
      const int sign = merge_sign(k.fmask, amask);
      PolyND mono = PolyND::constant(dims_.m, c.to_double() * sign);
      for (int j = 0; j < dims_.m; ++j)
        if (k.be[j] > 0) mono = mono * PolyND::variable(dims_.m, j, k.be[j]);
      auto [it, fresh] = acc.try_emplace(amask | k.fmask, mono * p);
      if (!fresh) it->second += mono * p;
    }
  }
  for (auto& [mask, p] : acc) r.set_part(mask, std::move(p));
  return r;
}

double GaussianSuperFunction::component_integral(std::uint32_t amask) const {
  auto it = parts_.find(amask);
  if (it == parts_.end()) return 0.0;
  // Int P(x) e^{-|x-c|^2/2} dV: shift to u = x - c and use the moments.
  std::vector<std::vector<double>> eye(dims_.m,
                                       std::vector<double>(dims_.m, 0.0));
  for (int j = 0; j < dims_.m; ++j) eye[j][j] = 1.0;
  const PolyND shifted = it->second.substitute_affine(center_, eye, dims_.m);
  double acc = 0.0;
  for (const auto& [k, c] : shifted.terms()) {
    double t = c;
    for (int j = 0; j < dims_.m; ++j) t *= gauss_moment(k[j]);
    acc += t;
  }
  return acc;
}

double GaussianSuperFunction::super_integral() const {
  const std::uint32_t top = (std::uint32_t{1} << dims_.nf()) - 1;
  return component_integral(top) * std::pow(M_PI, -dims_.n);
}

std::complex<double> GaussianSuperFunction::component_fourier(
    std::uint32_t amask, const std::vector<double>& xi) const {
  auto it = parts_.find(amask);
  if (it == parts_.end()) return {0.0, 0.0};
  // Shift to u = x - c, then factorize:
  // Int u^k e^{-i u s - u^2/2} du = sqrt(2 pi) (-i)^k He_k(s) e^{-s^2/2}.
  std::vector<std::vector<double>> eye(dims_.m,
                                       std::vector<double>(dims_.m, 0.0));
  for (int j = 0; j < dims_.m; ++j) eye[j][j] = 1.0;
  const PolyND shifted = it->second.substitute_affine(center_, eye, dims_.m);
  auto hermite_prob = [](int k, double s) {
    double h0 = 1.0, h1 = s;
    if (k == 0) return h0;
    for (int i = 2; i <= k; ++i) {
      const double h2 = s * h1 - (i - 1) * h0;
      h0 = h1;
      h1 = h2;
    }
    return h1;
  };
  const std::complex<double> mi(0.0, -1.0);
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [k, c] : shifted.terms()) {
    std::complex<double> t(c, 0.0);
    for (int j = 0; j < dims_.m; ++j) {
      t *= std::sqrt(2.0 * M_PI) * std::pow(mi, k[j]) *
           hermite_prob(k[j], xi[j]) * std::exp(-xi[j] * xi[j] / 2.0);
    }
    acc += t;
  }
  double phase = 0.0;
  for (int j = 0; j < dims_.m; ++j) phase += center_[j] * xi[j];
  return acc * std::exp(std::complex<double>(0.0, -phase));
}

GaussianSuperFunction make_test_function(const std::string& name, Dims d) {
  const int m = d.m, nf = d.nf();
  std::vector<double> c0(m, 0.0);
  std::vector<double> cs(m, 0.0);
  for (int j = 0; j < m; ++j) cs[j] = 0.3 - 0.2 * j;
  if (name == "gauss") return GaussianSuperFunction::gaussian(d, c0);
  if (name == "gauss_shifted") return GaussianSuperFunction::gaussian(d, cs);
  if (name == "gauss_x1sq") {
    auto f = GaussianSuperFunction::gaussian(d, c0);
    f.set_part(0, PolyND::variable(m, 0, 2));
    return f;
  }
  if (name == "gauss_xf1") {
    if (nf < 1) throw std::domain_error("gauss_xf1 needs n >= 1");
    GaussianSuperFunction f(d, c0);
    f.set_part(1u, PolyND::constant(m, 1.0));
    return f;
  }
  if (name == "gauss_mix") {
    // body + x_1-weighted top fermionic pair, a genuinely mixed element
    GaussianSuperFunction f(d, cs);
    f.set_part(0, PolyND::constant(m, 1.0) + PolyND::variable(m, 0));
    if (nf >= 2) f.set_part(0b11u, PolyND::variable(m, 0));
    if (nf >= 1) f.set_part(1u, PolyND::constant(m, 0.5));
    return f;
  }
  throw std::domain_error("unknown test function: " + name);
}

std::vector<std::string> test_function_names() {
  return {"gauss", "gauss_shifted", "gauss_x1sq", "gauss_xf1", "gauss_mix"};
}

}  // namespace superspace
