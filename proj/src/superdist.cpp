#include "superspace/superdist.hpp"

#include <cmath>

namespace superspace {

void RadialSuperExpansion::add(int j, const Rational& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(j, mu);
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar RadialSuperExpansion::coefficient(int j, const Rational& mu) const {
  auto it = terms_.find({j, mu});
  return it == terms_.end() ? Scalar(0) : it->second;
}

RadialSuperExpansion RadialSuperExpansion::scaled(const Scalar& c) const {
  RadialSuperExpansion r(dims_);
  for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
  return r;
}

RadialSuperExpansion RadialSuperExpansion::operator-(
    const RadialSuperExpansion& o) const {
  RadialSuperExpansion r = *this;
  for (const auto& [k, v] : o.terms_) r.add(k.first, k.second, -v);
  return r;
}

RadialSuperExpansion RadialSuperExpansion::laplacian() const {
  const int m = dims_.m, n = dims_.n;
  RadialSuperExpansion r(dims_);
  for (const auto& [k, c] : terms_) {
    const auto& [j, mu] = k;
    // Bosonic: Delta |ux|^mu = mu (mu + m - 2) |ux|^{mu-2}. The rule is
    // the classical one away from the distributional poles; landing on
    // the pole set is rejected rather than regularized here.
    if (mu != 0) {
      const Rational target = mu - 2;
      if (denominator(target) == 1) {
        const auto tnum = numerator(target);
        if (tnum <= -m && (m - (-static_cast<int>(tnum))) % 2 == 0)
          throw std::domain_error(
              "radial laplacian hits a distributional pole");
      }
      r.add(j, mu - 2, c * Scalar(mu * (mu + m - 2)));
    }
    // Fermionic: Delta_ferm x`^{2j} = 4 j (n - j + 1) x`^{2j-2}.
    if (j > 0) r.add(j - 1, mu, c * Scalar(Rational(4 * j * (n - j + 1))));
  }
  return r;
}

std::map<int, double> RadialSuperExpansion::eval_radial(double r) const {
  std::map<int, double> out;
  for (const auto& [k, c] : terms_)
    out[k.first] += c.to_double() * std::pow(r, static_cast<double>(k.second));
  return out;
}

RadialSuperExpansion super_power_expansion(Dims d, const Rational& lambda) {
  RadialSuperExpansion r(d);
  for (int j = 0; j <= d.n; ++j) {
    // Gamma(-lambda/2 + j) / Gamma(-lambda/2) = rising(-lambda/2, j)
    const Rational c = rising(-lambda / 2, j) / factorial(j);
    r.add(j, lambda - 2 * j, Scalar(c));
  }
  return r;
}

Scalar riesz_normalization(int M, const Rational& gamma) {
  if (denominator(gamma) != 1)
    throw std::domain_error("riesz normalization needs integer gamma");
  const int g = static_cast<int>(numerator(gamma));
  Rational two_pow = 1;
  for (int i = 0; i < std::abs(g); ++i) two_pow *= 2;
  if (g < 0) two_pow = 1 / two_pow;
  return Scalar(two_pow) * Scalar::pi_half_power(1, M) *
         gamma_exact(gamma / 2) *
         gamma_reciprocal_exact(Rational(M) / 2 - gamma / 2);
}

namespace {
bool in_2N0(const Rational& q) {
  return denominator(q) == 1 && q >= 0 && numerator(q) % 2 == 0;
}
}  // namespace

RieszKernel riesz_kernel(Dims d, const Rational& gamma) {
  const int M = d.M();
  if (in_2N0(gamma - M) || in_2N0(-gamma - M))
    throw std::domain_error("Riesz kernel parameter on excluded set");
  RieszKernel k;
  k.dims = d;
  k.gamma = gamma;
  k.normalization = riesz_normalization(M, gamma);
  k.expansion = super_power_expansion(d, gamma - M);
  return k;
}

RieszKernel riesz_laplacian_step(const RieszKernel& k) {
  RieszKernel next = riesz_kernel(k.dims, k.gamma - 2);
  // (-Delta) [expansion / H(gamma)] must equal expansion' / H(gamma-2).
  const Scalar lhs_norm = k.normalization.reciprocal();
  const Scalar rhs_norm = next.normalization.reciprocal();
  const auto lhs = k.expansion.laplacian().scaled(-lhs_norm);
  const auto rhs = next.expansion.scaled(rhs_norm);
  if (!(lhs - rhs).is_zero())
    throw std::logic_error("Riesz laplacian step failed symbolic check");
  return next;
}

SuperNormResidue super_norm_residue(Dims d, int ell) {
  if (d.m == 0)
    throw std::domain_error(
        "|x|^lambda residues are not defined for m = 0");
  const int M = d.M(), n = d.n;
  SuperNormResidue out;
  Rational pow4 = 1;
  for (int i = 0; i < ell; ++i) pow4 *= 4;

  out.residue_scalar = Scalar(Rational(2) / (pow4 * factorial(ell))) *
                       Scalar::pi_half_power(1, M) *
                       gamma_reciprocal_exact(Rational(M, 2) + ell);
  out.normalized_value = Scalar((ell % 2 ? Rational(-1) : Rational(1)) / pow4) *
                         Scalar::pi_half_power(1, M) *
                         gamma_reciprocal_exact(Rational(M, 2) + ell);
  for (int j = 0; j <= std::min(ell, n); ++j) {
    Rational fj = 1;
    for (int i = 0; i < j; ++i) fj *= 4;
    out.delta_expansion[j] = Scalar::pi_power(
        factorial(ell) * fj / (factorial(ell - j) * factorial(n - j)), n);
  }

  // Cross-check: the residue of the |x|^lambda expansion computed through
  // the bosonic residues res_{lam=-m-2t} |ux|^lam must reproduce
  // residue_scalar * delta_expansion on every x`^{2j} Delta_ux^t basis
  // element (term j of the expansion pairs with index n-j of the other).
  for (int j = 0; j <= n; ++j) {
    const int t = ell + j - n;
    Scalar via_bosonic(0);
    if (t >= 0) {
      Rational p4 = 1;
      for (int i = 0; i < t; ++i) p4 *= 4;
      const Rational cj = rising(Rational(M, 2) + ell, j) / factorial(j);
      via_bosonic = Scalar(cj * Rational(2) / (p4 * factorial(t))) *
                    Scalar::pi_half_power(1, d.m) *
                    gamma_reciprocal_exact(Rational(d.m, 2) + t);
    }
    Scalar direct(0);
    if (auto it = out.delta_expansion.find(n - j);
        it != out.delta_expansion.end())
      direct = out.residue_scalar * it->second;
    if (!(via_bosonic - direct).is_zero())
      throw std::logic_error("super norm residue cross-check failed");
  }
  return out;
}

Rational chu_vandermonde_sum(int ell, const Rational& s) {
  Rational acc = 0;
  for (int j = 0; j <= ell; ++j)
    acc += binomial(ell, j) * rising(s, ell - j) * rising(-s, j);
  return acc;
}

std::vector<Scalar> frac_laplacian_fundamental_coeffs(Dims d,
                                                      const Rational& s) {
  const int M = d.M(), n = d.n;
  if (in_2N0(2 * s - M) || in_2N0(-2 * s - M))
    throw std::domain_error("fractional parameter on excluded set");
  std::vector<Scalar> a(n + 1);
  for (int j = 0; j <= n; ++j) {
    Rational p4 = 1;
    for (int i = 0; i < j; ++i) p4 *= 4;
    a[j] = Scalar::pi_power(p4 * rising(s, j) / factorial(n - j), n);
  }
  // Exact residual of the linear system: for l = 1..n,
  //   sum_j 4^j a_{l-j} (n-l+j)! binom(l,j) Gamma(-s+j)/Gamma(-s) = 0.
  for (int ell = 1; ell <= n; ++ell) {
    Scalar acc(0);
    for (int j = 0; j <= ell; ++j) {
      Rational p4 = 1;
      for (int i = 0; i < j; ++i) p4 *= 4;
      acc += a[ell - j] * Scalar(p4 * factorial(n - ell + j) *
                                 binomial(ell, j) * rising(-s, j));
    }
    if (!acc.is_zero())
      throw std::logic_error("fundamental solution system residual nonzero");
  }
  return a;
}

bool fundsol_coefficient_system_check(Dims d, const Rational& s) {
  const int n = d.n;
  for (int ell = 1; ell <= n; ++ell) {
    Rational acc = 0;
    for (int j = 0; j <= ell; ++j) {
      Rational p4 = 1;
      for (int i = 0; i < ell - j; ++i) p4 *= 4;  // from a_{l-j}
      Rational aj = p4 * rising(s, ell - j) / factorial(n - ell + j);
      Rational p4j = 1;
      for (int i = 0; i < j; ++i) p4j *= 4;
      acc += p4j * aj * factorial(n - ell + j) * binomial(ell, j) *
             rising(-s, j);
    }
    if (acc != 0) return false;
  }
  return true;
}

bool fundsol_reassembly_check(Dims d, const Rational& s) {
  const int n = d.n, m = d.m, M = d.M();
  const Rational beta = Rational(m) / 2 - s;

  // (a) Coefficient identity in the telescoped ratio form, regular for
  // every s: H_M(2s)/H_m(2s+2t) collapses to
  // 4^{-t} pi^{-n} rising(beta-n, n-t) / rising(s, t), so the poles of
  // the individual normalizations cancel.
  for (int j = 0; j <= n; ++j) {
    const int t = n - j;  // the term a_t (-Delta)^{n-t} K pairs x`^{2j}
    Rational p4t = 1;
    for (int i = 0; i < t; ++i) p4t *= 4;
    const Rational a_t = p4t * rising(s, t) / factorial(n - t);  // a_t/pi^n
    const Rational hratio = rising(beta - n, n - t) / (rising(s, t) * p4t);
    if (a_t * hratio != rising(beta - n, j) / factorial(j)) return false;
  }

  // (b) Off the excluded set the kernels themselves exist: assemble
  // sum_j a_j (-Delta_ux)^{n-j}[K^m_{2s+2n}] x`^{2n-2j} by repeated
  // symbolic bosonic differentiation and compare the whole expansion
  // with K^M_{2s}.
  if (!in_2N0(2 * s - M) && !in_2N0(-2 * s - M)) {
    const auto a = frac_laplacian_fundamental_coeffs(d, s);
    const Scalar inv_bos = riesz_normalization(m, 2 * s + 2 * n).reciprocal();
    RadialSuperExpansion assembled(d);
    for (int j = 0; j <= n; ++j) {
      Rational mu = 2 * s + 2 * n - m;
      Scalar factor = inv_bos;
      for (int i = 0; i < n - j; ++i) {
        factor *= Scalar(-(mu * (mu + m - 2)));
        mu -= 2;
      }
      assembled.add(n - j, mu, a[j] * factor);
    }
    const auto target = riesz_kernel(d, 2 * s);
    const auto expect =
        target.expansion.scaled(target.normalization.reciprocal());
    if (!(assembled - expect).is_zero()) return false;
  }
  return true;
}

Rational log_primitive_coeff(int ell) {
  Rational a = 0;
  for (int l = 0; l < ell; ++l) a = (a + Rational(1) / factorial(l + 1)) / (l + 1);
  return a;
}

double log_primitive_eval(int ell, double x) {
  if (x <= 0) throw std::domain_error("log primitive needs x > 0");
  const double xl = std::pow(x, ell);
  return xl * std::log(x) / static_cast<double>(factorial(ell)) -
         static_cast<double>(log_primitive_coeff(ell)) * xl;
}

SuperPolynomial taylor_compose(
    const std::function<Scalar(const std::vector<int>&)>& derivs,
    const std::vector<SuperPolynomial>& nilpotents, int n_pairs) {
  if (nilpotents.empty()) throw std::domain_error("no arguments");
  const int nb = nilpotents[0].nb(), nf = nilpotents[0].nf();
  SuperPolynomial out(nb, nf);
  // Nilpotent powers vanish beyond n, so each index runs 0..n.
  std::vector<int> orders(nilpotents.size(), 0);
  std::vector<SuperPolynomial> powers(nilpotents.size());
  std::function<void(std::size_t, SuperPolynomial)> rec =
      [&](std::size_t arg, SuperPolynomial acc) {
        if (acc.is_zero()) return;
        if (arg == nilpotents.size()) {
          Rational kfact = 1;
          for (int k : orders) kfact *= factorial(k);
          out += acc.scaled(derivs(orders) * Scalar(1 / kfact));
          return;
        }
        SuperPolynomial p = SuperPolynomial::constant(nb, nf, Scalar(1));
        for (int k = 0; k <= n_pairs; ++k) {
          orders[arg] = k;
          rec(arg + 1, acc * p);
          p *= nilpotents[arg];
          if (p.is_zero()) break;
        }
        orders[arg] = 0;
      };
  rec(0, SuperPolynomial::constant(nb, nf, Scalar(1)));
  return out;
}

SuperPolynomial generalized_power(const SuperPolynomial& a,
                                  const Rational& lambda) {
  if (!a.is_even()) throw std::domain_error("generalized power of odd element");
  const Scalar body = a.body_at_zero();
  SuperPolynomial nil = a;
  nil -= SuperPolynomial::constant(a.nb(), a.nf(), body);
  for (const auto& [k, c] : nil.terms())
    if (k.fmask == 0)
      throw std::domain_error("nilpotent part has a bosonic monomial");
  if (!body.is_rational() || body.rational_part() <= 0)
    throw std::domain_error("body must be a positive rational");
  const Rational b = body.rational_part();
  const bool integral = denominator(lambda) == 1 && lambda >= 0;
  if (b != 1 && !integral)
    throw std::domain_error("exact power requires body 1 or integer lambda");

  auto derivs = [&](const std::vector<int>& orders) -> Scalar {
    const int k = orders[0];
    // d^k/da^k [a^lambda] at the body = falling(lambda,k) b^{lambda-k}
    Rational c = falling(lambda, k);
    if (b != 1 && c != 0) {
      long e = static_cast<long>(numerator(lambda)) - k;  // integer lambda
      Rational bp = 1;
      for (long i = 0; i < std::abs(e); ++i) bp *= b;
      c *= (e >= 0) ? bp : 1 / bp;
    }
    return Scalar(c);
  };
  const int max_pairs = a.nf() / 2;
  return taylor_compose(derivs, {nil}, max_pairs);
}

std::vector<ConcentratedDeltaTerm> concentrated_delta(
    const SuperPolynomial& nilpotent_part, int n_pairs, int ell) {
  if (!nilpotent_part.is_even())
    throw std::domain_error("nilpotent part must be even");
  std::vector<ConcentratedDeltaTerm> out;
  SuperPolynomial p = SuperPolynomial::constant(nilpotent_part.nb(),
                                                nilpotent_part.nf(), Scalar(1));
  for (int j = 0; j <= n_pairs; ++j) {
    if (p.is_zero()) break;
    out.push_back({p.scaled(Scalar(Rational(1) / factorial(j))), ell + j});
    p *= nilpotent_part;
  }
  return out;
}

}  // namespace superspace
