#include "sce/poly.hpp"

#include <stdexcept>
#include <utility>

namespace sce {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const GaussianRational& c) { return Poly({c}); }

Poly Poly::monomial(const GaussianRational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

bool Poly::is_real() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

GaussianRational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    v[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  }
  return Poly(std::move(v));
}

Poly Poly::derivative(int order) const {
  Poly p = *this;
  for (int k = 0; k < order && !p.is_zero(); ++k) p = p.derivative();
  return p;
}

GaussianRational Poly::operator()(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Poly Poly::scale_arg(const GaussianRational& c) const {
  std::vector<GaussianRational> v(coeffs_.size());
  GaussianRational power(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v[k] = coeffs_[k] * power;
    power *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(GaussianRational(1));
  for (unsigned k = 0; k < exponent; ++k) result *= *this;
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) v[a + b] += coeffs_[a] * rhs.coeffs_[b];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k) add_term(k, p.coeff(k));
}

LaurentPoly LaurentPoly::monomial(const GaussianRational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussianRational() : it->second;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e != 0) r.add_term(e - 1, c * GaussianRational(static_cast<long>(e)));
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Poly LaurentPoly::to_poly() const {
  if (terms_.empty()) return {};
  if (min_exponent() < 0) throw std::domain_error("Laurent polynomial has negative exponents");
  std::vector<GaussianRational> v(static_cast<std::size_t>(max_exponent()) + 1);
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e)] = c;
  return Poly(std::move(v));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly r;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------- ExpPoly

ExpPoly::ExpPoly(const GaussianRational& rate, const LaurentPoly& part) { add_term(rate, part); }

ExpPoly::ExpPoly(const LaurentPoly& part) { add_term(GaussianRational(), part); }

void ExpPoly::add_term(const GaussianRational& rate, const LaurentPoly& part) {
  if (part.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(rate, part);
  if (inserted) return;
  it->second += part;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly ExpPoly::part(const GaussianRational& rate) const {
  auto it = terms_.find(rate);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

bool ExpPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& [rate, part] = *terms_.begin();
  return rate.is_zero() && part.terms().size() == 1 && part.min_exponent() == 0;
}

ExpPoly ExpPoly::derivative() const {
  ExpPoly r;
  for (const auto& [rate, part] : terms_) r.add_term(rate, part.derivative() + part * rate);
  return r;
}

ExpPoly ExpPoly::nth_derivative(unsigned n) const {
  ExpPoly f = *this;
  for (unsigned k = 0; k < n; ++k) f = f.derivative();
  return f;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& [rate, part] : r.terms_) part = -part;
  return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  for (const auto& [rate, part] : rhs.terms_) add_term(rate, part);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  for (const auto& [rate, part] : rhs.terms_) add_term(rate, -part);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [rate, part] : terms_) part *= c;
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly r;
  for (const auto& [ra, pa] : lhs.terms_) {
    for (const auto& [rb, pb] : rhs.terms_) r.add_term(ra + rb, pa * pb);
  }
  return r;
}

}  // namespace sce
