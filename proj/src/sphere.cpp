#include "superspace/sphere.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "superspace/operators.hpp"

namespace superspace {

void gauss_legendre(int npts, std::vector<double>& x, std::vector<double>& w) {
  x.resize(npts);
  w.resize(npts);
  for (int i = 0; i < npts; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double t = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= npts; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = npts * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= npts; ++k) {
      const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = npts * (t * p1 - p0) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

SphereRule SphereRule::build(int m, int degree) {
  SphereRule r;
  r.m = m;
  r.exactness = degree;
  if (m == 1) {
    r.nodes = {{1.0}, {-1.0}};
    r.weights = {1.0, 1.0};
    r.exactness = 1 << 20;
    return r;
  }
  if (m == 2) {
    const int N = 2 * degree + 4;
    for (int k = 0; k < N; ++k) {
      const double th = 2.0 * M_PI * k / N;
      r.nodes.push_back({std::cos(th), std::sin(th)});
      r.weights.push_back(2.0 * M_PI / N);
    }
    return r;
  }
  if (m == 3) {
    const int nu = degree / 2 + 2;
    const int nphi = 2 * degree + 4;
    std::vector<double> u, wu;
    gauss_legendre(nu, u, wu);
    for (int i = 0; i < nu; ++i) {
      const double s = std::sqrt(std::max(0.0, 1.0 - u[i] * u[i]));
      for (int k = 0; k < nphi; ++k) {
        const double th = 2.0 * M_PI * k / nphi;
        r.nodes.push_back({s * std::cos(th), s * std::sin(th), u[i]});
        r.weights.push_back(wu[i] * 2.0 * M_PI / nphi);
      }
    }
    return r;
  }
  if (m == 4) {
    // S^3 as (cos psi, sin psi * omega): Gauss-Chebyshev (2nd kind) in
    // cos psi against the sin^2 weight, times an S^2 rule.
    const int npsi = degree + 4;
    SphereRule s2 = build(3, degree);
    for (int i = 1; i <= npsi; ++i) {
      const double th = M_PI * i / (npsi + 1.0);
      const double u = std::cos(th);
      const double wpsi = M_PI / (npsi + 1.0) * std::sin(th) * std::sin(th);
      const double s = std::sin(th);
      for (std::size_t kk = 0; kk < s2.nodes.size(); ++kk) {
        r.nodes.push_back({u, s * s2.nodes[kk][0], s * s2.nodes[kk][1],
                           s * s2.nodes[kk][2]});
        r.weights.push_back(wpsi * s2.weights[kk]);
      }
    }
    return r;
  }
  throw std::domain_error("sphere rules provided for m <= 4 only");
}

SphereRule SphereRule::load(const std::string& path, int m) {
  SphereRule r;
  r.m = m;
  r.exactness = 0;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quadrature file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double w;
    if (!(ls >> w)) continue;
    std::vector<double> x(m);
    for (int j = 0; j < m; ++j)
      if (!(ls >> x[j]))
        throw std::runtime_error("bad quadrature row: " + line);
    r.weights.push_back(w);
    r.nodes.push_back(std::move(x));
  }
  return r;
}

void SphereRule::save(const std::string& path) const {
  std::ofstream out(path);
  out.precision(17);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << weights[i];
    for (double x : nodes[i]) out << " " << x;
    out << "\n";
  }
}

double SphereRule::integrate(
    const std::function<double(const std::vector<double>&)>& f) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

void RadialClosedForm::add(double c, double p, double a, double b) {
  if (c == 0.0) return;
  for (auto& t : terms_)
    if (t.p == p && t.a == a && t.b == b) {
      t.c += c;
      return;
    }
  terms_.push_back({c, p, a, b});
}

void RadialClosedForm::add(const RadialClosedForm& o) {
  for (const auto& t : o.terms_) add(t.c, t.p, t.a, t.b);
}

RadialClosedForm RadialClosedForm::d_by_dr2() const {
  RadialClosedForm r;
  for (const auto& t : terms_) {
    // (1/(2r)) d/dr [c r^p e^{a r^2 + b r}]
    r.add(0.5 * t.c * t.p, t.p - 2, t.a, t.b);
    r.add(t.c * t.a, t.p, t.a, t.b);
    r.add(0.5 * t.c * t.b, t.p - 1, t.a, t.b);
  }
  return r;
}

double RadialClosedForm::eval(double r) const {
  double acc = 0.0;
  for (const auto& t : terms_)
    acc += t.c * std::pow(r, t.p) * std::exp(t.a * r * r + t.b * r);
  return acc;
}

double layer_integral(
    const SphereRule& rule, int order,
    const std::function<RadialClosedForm(const std::vector<double>&)>&
        radial_profile) {
  return 0.5 * rule.integrate([&](const std::vector<double>& w) {
    RadialClosedForm f = radial_profile(w);
    for (int q = 0; q < order; ++q) f = f.d_by_dr2();
    return f.eval(1.0);
  });
}

Rational layer_power_moment(const Rational& a, int j) {
  return falling(a / 2, j);
}

namespace {

Scalar pizzetti_coefficient(int M, int j) {
  Rational p4 = 1;
  for (int i = 0; i < j; ++i) p4 *= 4;
  return Scalar(Rational(2) / (p4 * factorial(j))) *
         Scalar::pi_half_power(1, M) *
         gamma_reciprocal_exact(Rational(M, 2) + j);
}

}  // namespace

Scalar pizzetti(const SuperPolynomial& p, Dims d) {
  return pizzetti_block(p, d, 0, 0).body_at_zero();
}

SuperPolynomial pizzetti_block(const SuperPolynomial& p, Dims d, int b0,
                               int f0) {
  const int M = d.M();
  SuperPolynomial acc(p.nb(), p.nf());
  SuperPolynomial cur = p;
  for (int j = 0; !cur.is_zero(); ++j) {
    const Scalar c = pizzetti_coefficient(M, j);
    if (!c.is_zero())
      acc += cur.eval_zero_block(b0, b0 + d.m, f0, f0 + d.nf()).scaled(c);
    cur = laplacian_block(cur, b0, b0 + d.m, f0 / 2, f0 / 2 + d.n);
  }
  return acc;
}

Scalar normalized_integral(const SuperPolynomial& p, Dims d) {
  return normalized_integral_block(p, d, 0, 0).body_at_zero();
}

SuperPolynomial normalized_integral_block(const SuperPolynomial& p, Dims d,
                                          int b0, int f0) {
  const int M = d.M();
  if (M > 0 || M % 2 != 0)
    throw std::domain_error("normalized integral needs M = -2k");
  const int k = -M / 2;
  // The defining limit only covers polynomials of degree <= 2k+1 in the
  // integration block.
  int deg = 0;
  std::uint32_t fblock = 0;
  for (int i = f0; i < f0 + d.nf(); ++i) fblock |= std::uint32_t{1} << i;
  for (const auto& [key, c] : p.terms()) {
    int t = std::popcount(key.fmask & fblock);
    for (int j = b0; j < b0 + d.m; ++j) t += key.be[j];
    deg = std::max(deg, t);
  }
  if (deg > 2 * k + 1)
    throw std::domain_error("normalized integral outside its degree range");
  SuperPolynomial acc(p.nb(), p.nf());
  SuperPolynomial cur = p;
  for (int j = 0; j <= k && !cur.is_zero(); ++j) {
    Rational p4 = 1;
    for (int i = 0; i < j; ++i) p4 *= 4;
    Rational c = factorial(k - j) / (p4 * factorial(j) * factorial(k));
    if (j % 2 == 1) c = -c;  // (-Delta)^j
    acc += cur.eval_zero_block(b0, b0 + d.m, f0, f0 + d.nf())
               .scaled(Scalar(c));
    cur = laplacian_block(cur, b0, b0 + d.m, f0 / 2, f0 / 2 + d.n);
  }
  return acc;
}

double supersphere_integral_delta_route(const SuperPolynomial& f, Dims d,
                                        const SphereRule& rule) {
  return supersphere_integral_delta_route_radial(f, d, rule,
                                                 RadialClosedForm::power(1, 0));
}

double supersphere_integral_delta_route_radial(
    const SuperPolynomial& f, Dims d, const SphereRule& rule,
    const RadialClosedForm& radial_factor) {
  // Int_SS F dS = 2 sum_{q,A} (1/q!) (Int_B x`^{2q} x`_A) L_q[F_A],
  // with L_q the q-fold layer integral of the subset component.
  const auto by_subset = f.by_fermionic_subset();
  const auto x2 = fermionic_norm_squared<Scalar>(d.nf(), 0, d.n);
  double acc = 0.0;
  for (int q = 0; q <= d.n; ++q) {
    const auto x2q = x2.pow(q);
    for (const auto& [amask, poly] : by_subset) {
      const Scalar ber =
          (x2q * GrassmannExact::monomial(d.nf(), amask, Scalar(1)))
              .berezin_full();
      if (ber.is_zero()) continue;
      const double factor = ber.to_double() / factorial(q).convert_to<double>();
      const double li = layer_integral(
          rule, q, [&](const std::vector<double>& w) -> RadialClosedForm {
            RadialClosedForm out;
            // r^{m-2} F_A(r w) split into homogeneous pieces.
            std::map<int, double> homo;
            for (const auto& [be, c] : poly) {
              int deg = 0;
              double v = c.to_double();
              for (int j = 0; j < d.m; ++j) {
                deg += be[j];
                for (int e = 0; e < be[j]; ++e) v *= w[j];
              }
              homo[deg] += v;
            }
            for (const auto& [deg, v] : homo) {
              for (const auto& t : radial_factor.terms())
                out.add(v * t.c, d.m - 2 + deg + t.p, t.a, t.b);
            }
            return out;
          });
      acc += 2.0 * factor * li;
    }
  }
  return acc;
}

double supersphere_integral_radial_super(const SuperPolynomial& f, Dims d,
                                         const SphereRule& rule,
                                         const RadialClosedForm& outer) {
  // f(|x|) = sum_k (-x`^2)^k / k! (d/dr^2)^k f |_{r=|ux|}
  const auto x2 = from_grassmann(
      fermionic_norm_squared<Scalar>(d.nf(), 0, d.n), d.m);
  double acc = 0.0;
  RadialClosedForm fk = outer;
  SuperPolynomial piece = SuperPolynomial::constant(d.m, d.nf(), Scalar(1));
  for (int k = 0; k <= d.n; ++k) {
    Rational c = Rational(1) / factorial(k);
    if (k % 2 == 1) c = -c;
    const auto integrand = (piece * f).scaled(Scalar(c));
    if (!integrand.is_zero())
      acc += supersphere_integral_delta_route_radial(integrand, d, rule, fk);
    fk = fk.d_by_dr2();
    piece *= x2;
  }
  return acc;
}

Scalar funk_hecke_alpha(int M, int ell, int j) {
  if ((j + ell) % 2 != 0 || j < ell) return Scalar(0);
  Rational p2 = 1;
  for (int i = 0; i < ell; ++i) p2 *= 2;
  return Scalar(factorial(j) / (factorial(j - ell) * p2) * 2) *
         Scalar::pi_half_power(1, M - 1) *
         gamma_exact(Rational(j - ell + 1, 2)) *
         gamma_reciprocal_exact(Rational(M + j + ell, 2));
}

Scalar funk_hecke_alpha_star(int k, int ell, int j) {
  if ((j + ell) % 2 != 0 || j < ell) return Scalar(0);
  if (j + ell > 2 * k + 1)
    throw std::domain_error("normalized Funk-Hecke out of range");
  Rational p2 = 1;
  for (int i = 0; i < ell; ++i) p2 *= 2;
  Rational c = factorial(k - (j + ell) / 2) / factorial(k) * factorial(j) /
               (factorial(j - ell) * p2);
  if (j % 2 == 1) c = -c;
  return Scalar(c) * gamma_exact(Rational(j - ell + 1, 2)) *
         Scalar::pi_half_power(1, -1);
}

std::vector<HarmonicEntry> builtin_harmonics(Dims d, int max_ell) {
  const int nb = d.m, nf = d.nf();
  auto X = [&](int j) { return SuperPolynomial::variable(nb, nf, j); };
  auto F = [&](int i) { return SuperPolynomial::fermion(nb, nf, i); };
  std::vector<HarmonicEntry> out;
  auto push = [&](int ell, const SuperPolynomial& h) {
    if (ell > max_ell) return;
    int deg = -1;
    if (!h.is_homogeneous(&deg) || deg != ell)
      throw std::logic_error("harmonic not homogeneous");
    if (!laplacian(h, d).is_zero())
      throw std::logic_error("built-in candidate is not harmonic");
    out.push_back({ell, h});
  };
  push(0, SuperPolynomial::constant(nb, nf, Scalar(1)));
  if (d.m >= 1) push(1, X(0));
  else if (d.n >= 1) push(1, F(0));
  if (d.m >= 2) {
    push(2, X(0) * X(1));
    push(2, X(0) * X(0) - X(1) * X(1));
    push(3, X(0) * X(0) * X(0) - X(0) * X(1) * X(1).scaled(Scalar(3)));
    if (d.n >= 1) push(3, (X(0) * X(0) - X(1) * X(1)) * F(0));
  } else if (d.m == 1 && d.n >= 1) {
    push(2, X(0) * F(0));
  } else if (d.m == 0 && d.n >= 2) {
    push(2, F(0) * F(2));
    if (d.n >= 3) push(3, F(0) * F(2) * F(4));
  }
  return out;
}

Scalar funk_hecke(Dims d, int j, const HarmonicEntry& H, bool normalized) {
  const int M = d.M();
  const Scalar alpha = normalized ? funk_hecke_alpha_star(-M / 2, H.ell, j)
                                  : funk_hecke_alpha(M, H.ell, j);
  // Cross-check against the Pizzetti-expanded integral on the joint
  // (x, w) algebra; exact equality of superpolynomials.
  const int nb = 2 * d.m, nf = 2 * d.nf();
  const auto ip = inner_product_blocks(nb, nf, d, 0, 0, d.m, d.nf());
  const auto Hw = embed(H.h, nb, nf, d.m, d.nf());
  const auto integrand = ip.pow(j) * Hw;
  const SuperPolynomial lhs =
      normalized ? normalized_integral_block(integrand, d, d.m, d.nf())
                 : pizzetti_block(integrand, d, d.m, d.nf());
  // alpha |x|^{j-l} H(x)   (x^{j-l} for the normalized variant)
  SuperPolynomial rhs(nb, nf);
  if (!alpha.is_zero()) {
    const auto Hx = embed(H.h, nb, nf, 0, 0);
    const int p = j - H.ell;  // even and >= 0 when alpha != 0
    Dims joint{nb, nf / 2};
    SuperPolynomial radial =
        embed(norm_squared(d), nb, nf, 0, 0).pow(p / 2);
    if (normalized && (p / 2) % 2 == 1) radial = -radial;  // x^2 = -|x|^2
    rhs = (radial * Hx).scaled(alpha);
    (void)joint;
  }
  if (!(lhs == rhs)) throw std::logic_error("Funk-Hecke cross-check failed");
  return alpha;
}

Scalar lemma_L3_prefactor(Dims d, int j) {
  Scalar s = Scalar(2) * gamma_exact(Rational(2 * j + 1, 2)) *
             Scalar::pi_half_power(1, -(2 * d.n + 1));
  if (j % 2 == 1) s = -s;
  return s;
}

}  // namespace superspace
