#include "superspace/scalar.hpp"

#include <cmath>
#include <sstream>

namespace superspace {

Rational rising(const Rational& a, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= a + i;
  return r;
}

Rational falling(const Rational& a, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= a - i;
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational double_factorial(int n) {
  if (n < -1) throw std::domain_error("double factorial of negative integer");
  Rational r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

Scalar::Scalar(int v) {
  if (v != 0) terms_[0] = v;
}

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_[0] = v;
}

Scalar Scalar::pi_half_power(const Rational& coeff, int q) {
  Scalar s;
  if (coeff != 0) s.terms_[q] = coeff;
  return s;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Scalar::rational_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [q, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [q, c] : o.terms_) terms_[q] += c;
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [q, c] : o.terms_) terms_[q] -= c;
  prune();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::map<int, Rational> out;
  for (const auto& [qa, ca] : terms_)
    for (const auto& [qb, cb] : o.terms_) out[qa + qb] += ca * cb;
  terms_ = std::move(out);
  prune();
  return *this;
}

Scalar Scalar::reciprocal() const {
  if (terms_.size() != 1)
    throw std::domain_error("Scalar::reciprocal requires a single term");
  const auto& [q, c] = *terms_.begin();
  return pi_half_power(Rational(1) / c, -q);
}

double Scalar::to_double() const {
  double v = 0.0;
  for (const auto& [q, c] : terms_)
    v += static_cast<double>(c) * std::pow(M_PI, q / 2.0);
  return v;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    Rational a = c;
    if (first) {
      first = false;
    } else {
      os << (c >= 0 ? " + " : " - ");
      if (c < 0) a = -c;
    }
    os << a.str();
    if (q != 0) {
      os << " * pi^";
      if (q % 2 == 0)
        os << q / 2;
      else
        os << "(" << q << "/2)";
    }
  }
  return os.str();
}

void Scalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

namespace {

bool is_integer(const Rational& a) { return denominator(a) == 1; }
bool is_half_integer(const Rational& a) { return denominator(a) == 2; }

}  // namespace

Scalar gamma_exact(const Rational& a) {
  if (is_integer(a)) {
    if (a <= 0) throw std::domain_error("gamma_exact at a pole");
    return Scalar(factorial(static_cast<int>(numerator(a)) - 1));
  }
  if (!is_half_integer(a))
    throw std::domain_error("gamma_exact defined for (half-)integers only");
  // Shift to Gamma(1/2) = sqrt(pi) by the recurrence Gamma(a+1) = a Gamma(a).
  Rational k2 = a - Rational(1, 2);  // an integer
  int k = static_cast<int>(numerator(k2));
  if (k >= 0) return Scalar::pi_half_power(falling(a - 1, k), 1);
  return Scalar::pi_half_power(Rational(1) / rising(a, -k), 1);
}

Scalar gamma_reciprocal_exact(const Rational& a) {
  if (is_integer(a) && a <= 0) return Scalar(0);
  return gamma_exact(a).reciprocal();
}

Rational gamma_ratio(const Rational& a, int j) {
  if (j < 0) throw std::domain_error("gamma_ratio needs j >= 0");
  return rising(a, j);
}

Scalar sigma_M(int M) {
  return Scalar(2) * Scalar::pi_half_power(1, M) *
         gamma_reciprocal_exact(Rational(M, 2));
}

}  // namespace superspace
