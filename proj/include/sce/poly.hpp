#pragma once

// Exact univariate calculus over Q(i): dense polynomials, Laurent
// polynomials, and exponential polynomials sum_k p_k(x) e^(mu_k x).

#include <map>
#include <vector>

#include "sce/exact.hpp"

namespace sce {

/// Dense polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);

  static Poly constant(const GaussianRational& c);
  /// c * x^degree.
  static Poly monomial(const GaussianRational& c, int degree);
  static Poly x() { return monomial(GaussianRational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_real() const;
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero outside the stored range.
  GaussianRational coeff(int k) const;

  Poly derivative() const;
  Poly derivative(int order) const;

  /// Horner evaluation at z.
  GaussianRational operator()(const GaussianRational& z) const;

  /// q with q(x) = p(c x).
  Poly scale_arg(const GaussianRational& c) const;

  Poly pow(unsigned exponent) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly p, const GaussianRational& c) { return p *= c; }
  friend Poly operator*(const GaussianRational& c, Poly p) { return p *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

/// Sparse polynomial in x and 1/x. Zero-valued entries are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Poly& p);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const GaussianRational& c, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, GaussianRational>& terms() const { return terms_; }
  GaussianRational coeff(int exponent) const;
  /// Smallest and largest stored exponent; the polynomial must be nonzero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly derivative() const;
  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;

  /// Converts to a Poly; throws std::domain_error if a negative exponent is present.
  Poly to_poly() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly p, const GaussianRational& c) { return p *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly p) { return p *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, const GaussianRational& c);

  std::map<int, GaussianRational> terms_;
};

/// Finite sum of p_k(x) e^(mu_k x), one term per distinct rate mu_k, no zero parts.
/// Differentiation stays inside the class: d/dx[p e^(mu x)] = (p' + mu p) e^(mu x).
class ExpPoly {
 public:
  using TermMap = std::map<GaussianRational, LaurentPoly, GaussianLess>;

  ExpPoly() = default;
  ExpPoly(const GaussianRational& rate, const LaurentPoly& part);
  /// part * e^(0 x)
  ExpPoly(const LaurentPoly& part);  // NOLINT(google-explicit-constructor)

  /// e^(rate x)
  static ExpPoly exp(const GaussianRational& rate) { return {rate, LaurentPoly::monomial(GaussianRational(1), 0)}; }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Part multiplying e^(rate x); zero if the rate is absent.
  LaurentPoly part(const GaussianRational& rate) const;

  /// True if the value is a constant c * e^(0 x), including zero.
  bool is_constant() const;

  ExpPoly derivative() const;
  ExpPoly nth_derivative(unsigned n) const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  ExpPoly& operator*=(const GaussianRational& c);

  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  friend ExpPoly operator*(ExpPoly f, const GaussianRational& c) { return f *= c; }
  friend ExpPoly operator*(const GaussianRational& c, ExpPoly f) { return f *= c; }

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const GaussianRational& rate, const LaurentPoly& part);

  TermMap terms_;
};

}  // namespace sce
