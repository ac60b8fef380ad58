#include "sce/genfunc.hpp"

#include <stdexcept>
#include <string>

namespace sce {

FormalSeries::FormalSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

FormalSeries::FormalSeries(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

namespace {

void require_same_order(const FormalSeries& a, const FormalSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

// Series whose coefficients are constants in x.
FormalSeries scalar_series(int order, const std::vector<GaussianRational>& c) {
  std::vector<Poly> v(static_cast<std::size_t>(order) + 1);
  for (std::size_t k = 0; k < v.size() && k < c.size(); ++k) v[k] = Poly::constant(c[k]);
  return FormalSeries(std::move(v));
}

// 1/(1 + t^step)
FormalSeries inverse_one_plus(int step, int order) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0, sign = 1; k <= order; k += step, sign = -sign) c[static_cast<std::size_t>(k)] = GaussianRational(sign);
  return scalar_series(order, c);
}

void require_alpha(const LinearHGSpec& spec) {
  if (spec.alpha.is_zero()) throw std::invalid_argument("A(x) must have a nonzero linear coefficient");
}

Rational rho_exponent(const LinearHGSpec& spec, int n) {
  const Rational& a = spec.alpha;
  return (-(spec.beta * spec.gamma) + a * (spec.delta(n) - a)) / (a * a);
}

}  // namespace

FormalSeries FormalSeries::partial_x() const {
  FormalSeries r = *this;
  for (auto& p : r.coeffs_) p = p.derivative();
  return r;
}

FormalSeries FormalSeries::substitute(const GaussianRational& x_scale, const GaussianRational& t_scale) const {
  FormalSeries r = *this;
  GaussianRational t_pow(1);
  for (auto& p : r.coeffs_) {
    p = p.scale_arg(x_scale) * t_pow;
    t_pow *= t_scale;
  }
  return r;
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries r = *this;
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const FormalSeries& rhs) {
  require_same_order(*this, rhs);
  std::vector<Poly> v(coeffs_.size());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b < coeffs_.size(); ++b) v[a + b] += coeffs_[a] * rhs.coeffs_[b];
  }
  coeffs_ = std::move(v);
  return *this;
}

FormalSeries& FormalSeries::operator*=(const GaussianRational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

FormalSeries series_exp_xt(const Rational& scale, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  std::vector<Poly> v(static_cast<std::size_t>(order) + 1);
  Rational coeff(1);
  for (int k = 0; k <= order; ++k) {
    v[static_cast<std::size_t>(k)] = Poly::monomial(GaussianRational(coeff), k);
    coeff = coeff * scale / Rational(k + 1);
  }
  return FormalSeries(std::move(v));
}

FormalSeries series_E(int order) { return series_exp_xt(Rational(1), order) * inverse_one_plus(1, order); }

FormalSeries series_Em(const Rational& m, int order) {
  if (m.is_zero()) throw std::invalid_argument("rate must be nonzero");
  return series_exp_xt(m, order) * inverse_one_plus(1, order);
}

FormalSeries series_S(int order) { return -(series_exp_xt(Rational(1), order) * inverse_one_plus(2, order)); }

FormalSeries series_C(int order) { return series_exp_xt(Rational(1), order) * inverse_one_plus(2, order); }

Report series_connection_check(int order) {
  Report report;
  const GaussianRational i = GaussianRational::i();
  FormalSeries e = series_E(order);
  FormalSeries e_side = e.substitute(i, -i) + e.substitute(-i, i);
  FormalSeries two_c = series_C(order) * GaussianRational(2);
  FormalSeries minus_two_s = series_S(order) * GaussianRational(-2);
  for (int k = 0; k <= order; ++k) {
    report.add("-2S = 2C", k, minus_two_s.coeff(k) == two_c.coeff(k));
    report.add("2C = E(ix,-it) + E(-ix,it)", k, two_c.coeff(k) == e_side.coeff(k));
  }
  return report;
}

RhoForm rho_linear(const LinearHGSpec& spec, int n) {
  require_alpha(spec);
  return {spec.alpha, spec.beta, rho_exponent(spec, n), spec.gamma / spec.alpha};
}

RhoForm sigma_linear(const LinearHGSpec& spec, int n) {
  RhoForm rho = rho_linear(spec, n);
  rho.exponent += Rational(n);
  return rho;
}

bool nu_degeneracy_check(const LinearHGSpec& spec) {
  require_alpha(spec);
  // The sigma exponent is n (1 + delta1/alpha) + const.
  return spec.delta1 == -spec.alpha;
}

FormalSeries theorem2_genfunc(const LinearHGSpec& spec, int order) {
  if (!nu_degeneracy_check(spec)) {
    throw std::invalid_argument("weight-function generating function inapplicable; sigma depends on n");
  }
  const Rational exponent = sigma_linear(spec, 0).exponent;

  // (1 + alpha t)^K
  std::vector<GaussianRational> binom(static_cast<std::size_t>(order) + 1);
  Rational alpha_pow(1);
  for (int j = 0; j <= order; ++j) {
    binom[static_cast<std::size_t>(j)] = binomial_general(exponent, static_cast<unsigned>(j)) * alpha_pow;
    alpha_pow *= spec.alpha;
  }
  FormalSeries power = scalar_series(order, binom);

  // e^(q(x) t) with q(x) = (gamma/alpha)(alpha x + beta)
  Poly q({GaussianRational(spec.gamma * spec.beta / spec.alpha), GaussianRational(spec.gamma)});
  std::vector<Poly> ex(static_cast<std::size_t>(order) + 1);
  Poly q_pow = Poly::constant(GaussianRational(1));
  Rational inv_fact(1);
  for (int k = 0; k <= order; ++k) {
    ex[static_cast<std::size_t>(k)] = q_pow * GaussianRational(inv_fact);
    q_pow *= q;
    inv_fact /= Rational(k + 1);
  }
  return power * FormalSeries(std::move(ex));
}

}  // namespace sce
