#pragma once

// Truncated formal power series in t with polynomial coefficients in x, the
// generating functions of the e/s/c families, and the generating-function
// construction for hypergeometric families whose weight A^n rho does not
// depend on n.

#include <vector>

#include "sce/exact.hpp"
#include "sce/poly.hpp"
#include "sce/report.hpp"

namespace sce {

/// sum_{k=0}^{order} coeff(k) t^k. Products truncate at the order.
class FormalSeries {
 public:
  explicit FormalSeries(int order);
  explicit FormalSeries(std::vector<Poly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  /// d/dx applied coefficientwise.
  FormalSeries partial_x() const;
  /// F(x_scale x, t_scale t).
  FormalSeries substitute(const GaussianRational& x_scale, const GaussianRational& t_scale) const;

  // Binary operations throw std::invalid_argument on an order mismatch.
  FormalSeries operator-() const;
  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const FormalSeries& rhs);
  FormalSeries& operator*=(const GaussianRational& c);

  friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) { return lhs += rhs; }
  friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) { return lhs -= rhs; }
  friend FormalSeries operator*(FormalSeries lhs, const FormalSeries& rhs) { return lhs *= rhs; }
  friend FormalSeries operator*(FormalSeries f, const GaussianRational& c) { return f *= c; }
  friend FormalSeries operator*(const GaussianRational& c, FormalSeries f) { return f *= c; }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Poly> coeffs_;
};

/// e^(scale x t): coefficient of t^k is (scale x)^k / k!.
FormalSeries series_exp_xt(const Rational& scale, int order);

/// e^(xt)/(1+t)
FormalSeries series_E(int order);
/// e^(mxt)/(1+t); throws std::invalid_argument for m == 0.
FormalSeries series_Em(const Rational& m, int order);
/// -e^(xt)/(1+t^2)
FormalSeries series_S(int order);
/// e^(xt)/(1+t^2)
FormalSeries series_C(int order);

/// Checks -2S(x,t) = 2C(x,t) = E(ix,-it) + E(-ix,it) coefficient by coefficient.
Report series_connection_check(int order);

/// A(x) y'' + B(x) y' + lambda y = 0 with A = alpha x + beta and
/// B = gamma x + delta0 + delta1 n.
struct LinearHGSpec {
  Rational alpha{1};
  Rational beta{0};
  Rational gamma{1};
  Rational delta0{0};
  Rational delta1{0};

  /// x y'' + (x - n) y' - n y = 0, solved by e_n.
  static LinearHGSpec for_e() { return {1, 0, 1, 0, -1}; }
  /// x y'' + (m x - n) y' - m n y = 0, solved by e_n^(m).
  static LinearHGSpec for_em(const Rational& m) { return {1, 0, m, 0, -1}; }
  /// x y'' + (order + 1 - x) y' + n y = 0, solved by L_n^(order).
  static LinearHGSpec for_laguerre(const Rational& order) { return {1, 0, -1, order + Rational(1), 0}; }

  Rational delta(int n) const { return delta0 + delta1 * Rational(n); }
  /// -n B' - n(n-1)/2 A''; A'' vanishes for linear A.
  Rational lambda(int n) const { return -(Rational(n) * gamma); }
};

/// (alpha x + beta)^exponent * e^(rate x), kept symbolic.
struct RhoForm {
  Rational alpha;
  Rational beta;
  Rational exponent;
  Rational rate;

  friend bool operator==(const RhoForm&, const RhoForm&) = default;
};

// The following throw std::invalid_argument when spec.alpha == 0.

/// Weight rho solving (A rho)' = B rho.
RhoForm rho_linear(const LinearHGSpec& spec, int n);
/// sigma = A^n rho.
RhoForm sigma_linear(const LinearHGSpec& spec, int n);
/// True iff the exponent of sigma does not depend on n (equivalently delta1 == -alpha).
bool nu_degeneracy_check(const LinearHGSpec& spec);

/// Expands sigma(s)/sigma(x) at the root s of s - x - A(x) t = 0, which for
/// linear A is (1 + alpha t)^K e^((gamma/alpha)(alpha x + beta) t) with K the
/// constant sigma exponent. Throws std::invalid_argument when the degeneracy
/// check fails.
FormalSeries theorem2_genfunc(const LinearHGSpec& spec, int order);

}  // namespace sce
