#include "superspace/radon.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <bit>
#include <cmath>
#include <memory>
#include <ostream>

#include "superspace/superdist.hpp"

namespace superspace {

double RadonProfile::eval(double p) const {
  const double tau = p - mu;
  double acc = 0.0;
  for (std::size_t a = q.size(); a-- > 0;) acc = acc * tau + q[a];
  return acc * std::exp(-tau * tau / 2.0);
}

RadonProfile RadonProfile::deriv() const {
  // (Q' - tau Q) e^{-tau^2/2}
  RadonProfile r;
  r.mu = mu;
  r.q.assign(q.size() + 1, 0.0);
  for (std::size_t a = 1; a < q.size(); ++a) r.q[a - 1] += a * q[a];
  for (std::size_t a = 0; a < q.size(); ++a) r.q[a + 1] -= q[a];
  while (r.q.size() > 1 && r.q.back() == 0.0) r.q.pop_back();
  return r;
}

RadonProfile RadonProfile::deriv_n(int k) const {
  RadonProfile r = *this;
  for (int i = 0; i < k; ++i) r = r.deriv();
  return r;
}

double RadonProfile::integrate() const {
  double acc = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a)
    acc += q[a] * gauss_moment(static_cast<int>(a));
  return acc;
}

std::complex<double> RadonProfile::fourier(double r) const {
  // Int e^{-irp} Q(p-mu) e^{-(p-mu)^2/2} dp
  //   = e^{-ir mu} sum_a q_a sqrt(2pi) (-i)^a He_a(r) e^{-r^2/2}
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
  for (std::size_t a = 0; a < q.size(); ++a)
    acc += q[a] * std::sqrt(2.0 * M_PI) * std::pow(mi, static_cast<int>(a)) *
           hermite_prob(static_cast<int>(a), r) * std::exp(-r * r / 2.0);
  return acc * std::exp(std::complex<double>(0.0, -r * mu));
}

TestFunction1D RadonProfile::as_test_function() const {
  auto cache = std::make_shared<std::vector<RadonProfile>>();
  cache->push_back(*this);
  return TestFunction1D(
      [cache](int order, double t) {
        while (static_cast<int>(cache->size()) <= order)
          cache->push_back(cache->back().deriv());
        return (*cache)[order].eval(t);
      },
      0);
}

void RadonProfile::add_scaled(const RadonProfile& o, double c) {
  if (q.empty()) mu = o.mu;
  if (std::abs(mu - o.mu) > 1e-12)
    throw std::logic_error("profile centers differ");
  if (o.q.size() > q.size()) q.resize(o.q.size(), 0.0);
  for (std::size_t a = 0; a < o.q.size(); ++a) q[a] += c * o.q[a];
}

RadonProfile bosonic_radon_profile(const PolyND& P,
                                   const std::vector<double>& c,
                                   const std::vector<double>& w) {
  const int m = P.nvars();
  // Orthonormal frame with w as first axis.
  std::vector<std::vector<double>> basis;
  double nw = 0.0;
  for (double v : w) nw += v * v;
  nw = std::sqrt(nw);
  std::vector<double> w0(m);
  for (int j = 0; j < m; ++j) w0[j] = w[j] / nw;
  basis.push_back(w0);
  for (int axis = 0; axis < m && static_cast<int>(basis.size()) < m; ++axis) {
    std::vector<double> v(m, 0.0);
    v[axis] = 1.0;
    for (const auto& b : basis) {
      double dot = 0.0;
      for (int j = 0; j < m; ++j) dot += v[j] * b[j];
      for (int j = 0; j < m; ++j) v[j] -= dot * b[j];
    }
    double nv = 0.0;
    for (double t : v) nv += t * t;
    nv = std::sqrt(nv);
    if (nv > 1e-10) {
      for (double& t : v) t /= nv;
      basis.push_back(v);
    }
  }
  // x = c + tau w0 + sum_i s_i u_i; integrate out s with its Gaussian.
  std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
  for (int j = 0; j < m; ++j) {
    A[j][0] = w0[j];
    for (int i = 1; i < m; ++i) A[j][i] = basis[i][j];
  }
  const PolyND sub = P.substitute_affine(c, A, m);
  RadonProfile out;
  for (int j = 0; j < m; ++j) out.mu += c[j] * w0[j];
  for (const auto& [k, coeff] : sub.terms()) {
    double t = coeff;
    for (int i = 1; i < m; ++i) t *= gauss_moment(k[i]);
    if (t == 0.0) continue;
    if (out.q.size() <= k[0]) out.q.resize(k[0] + 1, 0.0);
    out.q[k[0]] += t;
  }
  return out;
}

double bosonic_radon_numeric(const PolyND& P, const std::vector<double>& c,
                             const std::vector<double>& w, double p,
                             double tol) {
  const int m = P.nvars();
  std::vector<std::vector<double>> basis;
  std::vector<double> w0 = w;
  double nw = 0.0;
  for (double v : w) nw += v * v;
  nw = std::sqrt(nw);
  for (double& v : w0) v /= nw;
  basis.push_back(w0);
  for (int axis = 0; axis < m && static_cast<int>(basis.size()) < m; ++axis) {
    std::vector<double> v(m, 0.0);
    v[axis] = 1.0;
    for (const auto& b : basis) {
      double dot = 0.0;
      for (int j = 0; j < m; ++j) dot += v[j] * b[j];
      for (int j = 0; j < m; ++j) v[j] -= dot * b[j];
    }
    double nv = 0.0;
    for (double t : v) nv += t * t;
    nv = std::sqrt(nv);
    if (nv > 1e-10) {
      for (double& t : v) t /= nv;
      basis.push_back(v);
    }
  }
  auto value_at = [&](double s1, double s2) {
    std::vector<double> x(m);
    double q = 0.0;
    for (int j = 0; j < m; ++j) {
      x[j] = p * basis[0][j] + s1 * (m >= 2 ? basis[1][j] : 0.0) +
             s2 * (m >= 3 ? basis[2][j] : 0.0);
      const double d = x[j] - c[j];
      q += d * d;
    }
    return P.eval(x) * std::exp(-q / 2.0);
  };
  if (m == 1) return value_at(0.0, 0.0);
  if (m == 2)
    return integrate_R([&](double s) { return value_at(s, 0.0); }, tol);
  if (m == 3)
    return integrate_R(
        [&](double s1) {
          return integrate_R([&](double s2) { return value_at(s1, s2); },
                             tol * 10);
        },
        tol);
  throw std::domain_error("numeric fallback provided for m <= 3");
}

std::map<std::uint32_t, RadonProfile> RadonData::profiles_at(
    const std::vector<double>& w) const {
  std::map<std::uint32_t, RadonProfile> out;
  std::map<std::uint32_t, RadonProfile> base;  // per source component
  for (const auto& [B, pieces] : recipe_) {
    RadonProfile acc;
    for (const auto& pc : pieces) {
      auto it = base.find(pc.amask);
      if (it == base.end())
        it = base
                 .try_emplace(pc.amask,
                              bosonic_radon_profile(
                                  phi_.parts().at(pc.amask), phi_.center(), w))
                 .first;
      acc.add_scaled(it->second.deriv_n(pc.deriv), pc.coeff);
    }
    out.try_emplace(B, std::move(acc));
  }
  return out;
}

RadonData radon_transform(const GaussianSuperFunction& phi) {
  const Dims d = phi.dims();
  const int nf = d.nf();
  const int NG = 2 * nf;  // x` block [0, nf), w` block [nf, 2nf)
  const auto pairing = fermionic_pairing<Scalar>(NG, 0, nf, d.n);
  std::map<std::uint32_t, std::vector<RadonData::Piece>> recipe;
  GrassmannExact pw = GrassmannExact::one(NG);
  Rational jfact = 1;
  for (int j = 0; j <= nf; ++j) {
    if (j > 0) {
      pw = pw * pairing;
      jfact *= j;
      if (pw.is_zero()) break;
    }
    for (const auto& [amask, poly] : phi.parts()) {
      const auto ber =
          (pw * GrassmannExact::monomial(NG, amask, Scalar(1)))
              .berezin_block(0, nf);
      for (const auto& [wmask, coeff] : ber.terms()) {
        double c = (coeff * Scalar(Rational(1) / jfact)).to_double();
        if (j % 2 == 1) c = -c;  // (-d_p)^j
        if (c == 0.0) continue;
        recipe[wmask >> nf].push_back({c, j, amask});
      }
    }
  }
  return RadonData(phi, std::move(recipe));
}

CentralSlicePair central_slice_check(const GaussianSuperFunction& phi,
                                     const std::vector<double>& w, double r) {
  const Dims d = phi.dims();
  const int nf = d.nf();
  const int NG = 2 * nf;
  const int M = d.M();
  const std::complex<double> norm =
      std::pow(std::complex<double>(2.0 * M_PI, 0.0), -M / 2.0);

  // lhs: super Fourier transform at y = r w (fermionic part symbolic):
  // (2pi)^{-M/2} sum_k (-i r)^k/k! Int_B <x`,w`>^k x`_A F_bos[f_A](r uw).
  GrassmannCx lhs(nf);
  std::vector<double> xi(d.m);
  for (int j = 0; j < d.m; ++j) xi[j] = r * w[j];
  const auto pairing = fermionic_pairing<Scalar>(NG, 0, nf, d.n);
  GrassmannExact pw = GrassmannExact::one(NG);
  Rational kfact = 1;
  for (int k = 0; k <= nf; ++k) {
    if (k > 0) {
      pw = pw * pairing;
      kfact *= k;
      if (pw.is_zero()) break;
    }
    const std::complex<double> fac =
        std::pow(std::complex<double>(0.0, -r), k) /
        static_cast<double>(kfact);
    for (const auto& [amask, poly] : phi.parts()) {
      const auto ber =
          (pw * GrassmannExact::monomial(NG, amask, Scalar(1)))
              .berezin_block(0, nf);
      if (ber.is_zero()) continue;
      const std::complex<double> fb = phi.component_fourier(amask, xi);
      for (const auto& [wmask, coeff] : ber.terms())
        lhs += GrassmannCx::monomial(nf, wmask >> nf,
                                     norm * fac * coeff.to_double() * fb);
    }
  }

  // rhs: (2pi)^{-M/2} Int e^{-irp} R[phi](w, p) dp, profile by profile.
  GrassmannCx rhs(nf);
  const auto data = radon_transform(phi);
  for (const auto& [B, prof] : data.profiles_at(w))
    rhs += GrassmannCx::monomial(nf, B, norm * prof.fourier(r));
  return {lhs, rhs};
}

GrassmannNum pair_kernel_radon(const Kernel1D& g, const RadonData& data,
                               const std::vector<double>& w, double a0,
                               const GrassmannNum& a_nil, double tol) {
  // R(w, p - a0 - nu) = sum_k (-nu)^k/k! d_p^k R(w, p - a0); the pairing
  // against the shifted profile just moves its center.
  const int nf = data.dims().nf();
  GrassmannNum out(nf);
  const auto profs = data.profiles_at(w);
  GrassmannNum nu_pow = GrassmannNum::one(nf);
  double kfact = 1.0;
  for (int k = 0; k <= nf; ++k) {
    if (k > 0) {
      nu_pow = nu_pow * a_nil.scaled(-1.0);
      kfact *= k;
      if (nu_pow.is_zero()) break;
    }
    for (const auto& [B, prof] : profs) {
      RadonProfile shifted = prof.deriv_n(k);
      shifted.mu += a0;
      const double val =
          pair_kernel_1d(g, shifted.as_test_function(), tol) / kfact;
      out += (nu_pow * GrassmannNum::monomial(nf, B, 1.0)).scaled(val);
    }
  }
  return out;
}

DualEvaluator::DualEvaluator(const RadonData& data, const SphereRule& rule,
                             std::vector<double> x, int extra_derivs)
    : dims_(data.dims()) {
  const Dims d = dims_;
  const int nf = d.nf();
  const int NG = 2 * nf;  // y` block [0, nf), w` block [nf, 2nf)
  const auto pairing = fermionic_pairing<Scalar>(NG, 0, nf, d.n);
  const auto wund2 = fermionic_norm_squared<Scalar>(NG, nf, d.n);

  // Terms: for recipe mask B, Taylor order k in <y`,w`> and layer order
  // q, the Berezin over w` of  pair^k/k! w`_B wund^{2q}/q!  leaves an
  // exact y`-monomial coefficient; the bosonic payload has homogeneity
  // degree d_hom = 1 + |B| + extra + k.
  GrassmannExact pw = GrassmannExact::one(NG);
  Rational kfact = 1;
  for (int k = 0; k <= nf; ++k) {
    if (k > 0) {
      pw = pw * pairing;
      kfact *= k;
      if (pw.is_zero()) break;
    }
    for (const auto& [B, pieces] : data.recipe()) {
      const auto wB = GrassmannExact::monomial(
          NG, B << nf, Scalar(Rational(1) / kfact));
      GrassmannExact qpow = GrassmannExact::one(NG);
      Rational qfact = 1;
      for (int qq = 0; qq <= d.n; ++qq) {
        if (qq > 0) {
          qpow = qpow * wund2;
          qfact *= qq;
          if (qpow.is_zero()) break;
        }
        const auto ber = (pw * wB * qpow.scaled(Scalar(Rational(1) / qfact)))
                             .berezin_block(nf, nf);
        if (ber.is_zero()) continue;
        const int dhom = 1 + std::popcount(B) + extra_derivs + k;
        // q-fold u-derivative of u^alpha h(p u^{-1/2} + <x,w>) at u = 1;
        // each step splits a term into the power part and the chain part
        // carrying one more profile derivative and one more power of p.
        struct Chain {
          Rational c, beta;
          int i, j;
        };
        std::vector<Chain> chain{
            {Rational(1), Rational(d.m - 2 - dhom, 2), 0, 0}};
        for (int step = 0; step < qq; ++step) {
          std::vector<Chain> next;
          for (const auto& t : chain) {
            if (t.c * t.beta != 0)
              next.push_back({t.c * t.beta, t.beta - 1, t.i, t.j});
            next.push_back({t.c * Rational(-1, 2),
                            t.beta - Rational(3, 2), t.i + 1, t.j + 1});
          }
          chain = std::move(next);
        }
        std::map<std::pair<int, int>, Rational> collected;
        for (const auto& t : chain) collected[{t.i, t.j}] += t.c;
        for (const auto& [ymask, kappa] : ber.terms()) {
          const double kv = kappa.to_double();
          if (kv == 0.0) continue;
          for (const auto& [ij, c] : collected) {
            const double wgt = kv * static_cast<double>(c);
            if (wgt != 0.0)
              terms_.push_back(
                  {ymask, wgt, B, extra_derivs + k + ij.first, ij.second});
          }
        }
      }
    }
  }

  // Node-side precomputation: profiles differentiated to every needed
  // order, plus the evaluation abscissa <x, w> per node.
  std::vector<std::pair<std::uint32_t, int>> needed;
  for (const auto& t : terms_) needed.push_back({t.B, t.derivs});
  nodes_.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    NodeData nd;
    nd.weight = rule.weights[i];
    nd.xw = 0.0;
    for (int j = 0; j < d.m; ++j) nd.xw += x[j] * rule.nodes[i][j];
    const auto profs = data.profiles_at(rule.nodes[i]);
    for (const auto& [B, derivs] : needed) {
      if (nd.prof.count({B, derivs})) continue;
      nd.prof.try_emplace({B, derivs}, profs.at(B).deriv_n(derivs));
    }
    nodes_.push_back(std::move(nd));
  }
}

GrassmannNum DualEvaluator::eval(double p_offset) const {
  GrassmannNum out(dims_.nf());
  for (const auto& t : terms_) {
    if (t.ppow > 0 && p_offset == 0.0) continue;
    double sph = 0.0;
    for (const auto& nd : nodes_)
      sph += nd.weight * nd.prof.at({t.B, t.derivs}).eval(p_offset + nd.xw);
    double w = t.weight * sph;
    for (int i = 0; i < t.ppow; ++i) w *= p_offset;
    out += GrassmannNum::monomial(dims_.nf(), t.ymask, w);
  }
  return out;
}

GrassmannNum dual_radon_shifted(const RadonData& data, const SphereRule& rule,
                                const std::vector<double>& x, double p_offset,
                                int extra_derivs) {
  return DualEvaluator(data, rule, x, extra_derivs).eval(p_offset);
}

namespace {

/// Componentwise quadrature of a Grassmann-valued integrand with fixed
/// Gauss-Legendre panels; the integrands here decay like Gaussian tails
/// well inside (0, L).
GrassmannNum integrate_components(
    const std::function<GrassmannNum(double)>& f, int nf, double lo, double hi,
    int npts) {
  std::vector<double> x, w;
  gauss_legendre(npts, x, w);
  GrassmannNum acc(nf);
  const double mid = (hi + lo) / 2, half = (hi - lo) / 2;
  for (int i = 0; i < npts; ++i)
    acc += f(mid + half * x[i]).scaled(w[i] * half);
  return acc;
}

double pow_int(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return e >= 0 ? r : 1.0 / r;
}

}  // namespace

double negative_even_first_term(const RadonData& data,
                                const GaussianSuperFunction& phi,
                                const std::vector<double>& y,
                                const SphereRule& rule) {
  const Dims d = data.dims();
  const int M = d.M();
  const int k = -M / 2;
  // Delta_w^k R[phi] = d_p^{2k} R[|x|^{2k} phi]; the integral
  // Int p^{2k} (.)(w, p + <y,w>) dp is independent of w, checked here on
  // two nodes.
  const auto phi2 = phi.mul_superpoly(norm_squared(d).pow(k));
  const auto data2 = radon_transform(phi2);
  auto eval_at = [&](const std::vector<double>& w) {
    const auto profs = data2.profiles_at(w);
    auto it = profs.find(0);
    if (it == profs.end()) return 0.0;
    double yw = 0.0;
    for (int j = 0; j < d.m; ++j) yw += y[j] * w[j];
    const RadonProfile pr = it->second.deriv_n(2 * k);
    return integrate_R(
        [&](double p) { return pow_int(p, 2 * k) * pr.eval(p + yw); }, 1e-11);
  };
  const double v1 = eval_at(rule.nodes.front());
  const double v2 = eval_at(rule.nodes[rule.nodes.size() / 2]);
  if (std::abs(v1 - v2) > 1e-7 * (1.0 + std::abs(v1)))
    throw std::logic_error("first summand is not direction-independent");
  return v1;
}

InversionReport invert(const RadonData& data, const GaussianSuperFunction& phi,
                       const std::vector<double>& y, const SphereRule& rule,
                       double tol) {
  const Dims d = data.dims();
  const int M = d.M();
  const int nf = d.nf();
  if (d.m == 0)
    throw UnsupportedCase("m = 0: use the fermionic inversion transform");
  if (M < 0 && M % 2 != 0)
    throw UnsupportedCase("odd negative superdimension deferred");

  GrassmannNum rec(nf);
  if (M >= 1 && M % 2 == 1) {
    const double coef =
        ((M - 1) / 2 % 2 == 0 ? 1.0 : -1.0) / (2.0 * pow_int(2.0 * M_PI, M - 1));
    rec = dual_radon_shifted(data, rule, y, 0.0, M - 1).scaled(coef);
  } else if (M >= 2) {
    const double coef =
        (M / 2 % 2 == 0 ? 1.0 : -1.0) / pow_int(2.0 * M_PI, M);
    DualEvaluator ev(data, rule, y, M - 1);
    // odd-part regularization of the outer 1/p integral
    auto oddpart = [&](double p) {
      return (ev.eval(p) - ev.eval(-p)).scaled(1.0 / p);
    };
    rec = integrate_components(oddpart, nf, 0.0, 14.0, 160).scaled(coef);
  } else {
    // M = -2k
    const int k = -M / 2;
    const double t1 = negative_even_first_term(data, phi, y, rule);
    const double pref1 =
        1.0 / (pow_int(2.0, 2 * k - 1) *
               static_cast<double>(factorial(k) * factorial(k)) *
               sigma_M(-2 * k + 1).to_double());
    rec += GrassmannNum::monomial(nf, 0, pref1 * t1);

    DualEvaluator ev(data, rule, y, 0);
    auto evenpair = [&](double p) {
      const double g = log_primitive_eval(2 * k, p);
      return (ev.eval(p) + ev.eval(-p)).scaled(g);
    };
    // G_{2k}(p) ~ p^{2k} ln p near zero: integrable and mild for k >= 1.
    GrassmannNum t2 = integrate_components(evenpair, nf, 0.0, 1.0, 80);
    t2 += integrate_components(evenpair, nf, 1.0, 14.0, 160);
    const double pref2 =
        (k % 2 == 0 ? -1.0 : 1.0) * pow_int(4.0 * M_PI * M_PI, k);
    rec += t2.scaled(pref2);
  }

  InversionReport rep;
  rep.recovered = rec;
  rep.reference = phi.value_at(y);
  double maxdiff = 0.0, maxref = 0.0;
  auto diff = rec - rep.reference;
  for (const auto& [mask, c] : diff.terms())
    maxdiff = std::max(maxdiff, std::abs(c));
  for (const auto& [mask, c] : rep.reference.terms())
    maxref = std::max(maxref, std::abs(c));
  rep.abs_err = maxdiff;
  rep.rel_err = maxref > 0 ? maxdiff / maxref : maxdiff;
  (void)tol;
  return rep;
}

GrassmannExact invert_fermionic(const GrassmannExact& phi, int n) {
  const int nf = 2 * n;
  const int NG = 3 * nf;  // x` [0,nf), w` [nf,2nf), y` [2nf,3nf)
  // <x` - y`, w`>
  const auto ip = fermionic_pairing<Scalar>(NG, 0, nf, n) -
                  fermionic_pairing<Scalar>(NG, 2 * nf, nf, n);
  GrassmannExact integrand = ip.pow(2 * n);
  // embed phi on the x` block
  GrassmannExact phix(NG);
  for (const auto& [mask, c] : phi.terms())
    phix += GrassmannExact::monomial(NG, mask, c);
  integrand = integrand * phix;

  auto laplace_w = [&](const GrassmannExact& g) {
    GrassmannExact acc(NG);
    for (int a = 0; a < n; ++a)
      acc += g.derivative(nf + 2 * a + 1).derivative(nf + 2 * a).scaled(
          Scalar(-4));
    return acc;
  };
  GrassmannExact val = integrand.berezin_block(0, nf);
  for (int i = 0; i < n; ++i) val = laplace_w(val);

  // prefactor 1/(2^{2n-1} (n!)^2 sigma_{-2n+1})
  Rational two_pow = 1;
  for (int i = 0; i < 2 * n - 1; ++i) two_pow *= 2;
  const Scalar full_pref = Scalar(Rational(1) / (two_pow * factorial(n) *
                                                 factorial(n))) *
                           sigma_M(-2 * n + 1).reciprocal();
  val = val.scaled(full_pref);

  // the result must live on the y` block; map it back to 2n generators
  GrassmannExact out(nf);
  for (const auto& [mask, c] : val.terms()) {
    if (mask & ((std::uint32_t{1} << (2 * nf)) - 1))
      throw std::logic_error("fermionic inversion left stray generators");
    out += GrassmannExact::monomial(nf, mask >> (2 * nf), c);
  }
  return out;
}

BackprojectionPair backprojection_identity(const GaussianSuperFunction& phi,
                                           const std::vector<double>& x,
                                           const SphereRule& rule,
                                           double tol) {
  const Dims d = phi.dims();
  const int M = d.M();
  BackprojectionPair out;
  const auto data = radon_transform(phi);
  out.lhs = dual_radon_shifted(data, rule, x, 0.0, 0);

  if (M == 1) {
    // K^M_{M-1} degenerates to the normalized delta: R*R[phi] = 2 phi.
    out.rhs = phi.value_at(x).scaled(2.0);
  } else if (d.n == 0) {
    // rhs = C Int_0^inf Int_S phi(x + rho w) drho dS, with
    // C = 2^m pi^{m-1} / H_m(m-1).
    const double C =
        pow_int(2.0, d.m) * pow_int(M_PI, d.m - 1) /
        riesz_normalization(d.m, Rational(d.m - 1)).to_double();
    const double v = integrate_0_inf(
        [&](double rho) {
          return rule.integrate([&](const std::vector<double>& w) {
            std::vector<double> xp(d.m);
            for (int j = 0; j < d.m; ++j) xp[j] = x[j] + rho * w[j];
            return phi.component(0, xp);
          });
        },
        tol);
    out.rhs = GrassmannNum::monomial(d.nf(), 0, C * v);
  } else {
    throw std::domain_error(
        "backprojection rhs implemented for M = 1 and bosonic cases");
  }
  return out;
}

void export_radon_csv(const RadonData& data, const SphereRule& rule,
                      const std::vector<double>& p_samples, std::ostream& os) {
  os << "subset,node,p,value\n";
  os.precision(17);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto profs = data.profiles_at(rule.nodes[i]);
    for (const auto& [B, prof] : profs)
      for (double p : p_samples)
        os << B << "," << i << "," << p << "," << prof.eval(p) << "\n";
  }
}

}  // namespace superspace
