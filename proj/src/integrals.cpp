#include "sce/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "sce/families.hpp"

namespace sce {

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf = GaussianRational(Rational(1, 2));

// cos x = (e^(ix) + e^(-ix)) / 2
ExpPoly cos_x() { return ExpPoly::exp(kI) * kHalf + ExpPoly::exp(-kI) * kHalf; }

// sin x = (e^(ix) - e^(-ix)) / 2i
ExpPoly sin_x() { return ExpPoly::exp(kI) * (-kI * kHalf) + ExpPoly::exp(-kI) * (kI * kHalf); }

ExpPoly poly_times(const Poly& p, const ExpPoly& basis) { return ExpPoly(LaurentPoly(p)) * basis; }

ExpPoly basis(Kind kind, const Rational& m) {
  switch (kind) {
    case Kind::Sin: return sin_x();
    case Kind::Cos: return cos_x();
    case Kind::Exp: return ExpPoly::exp(GaussianRational(m));
  }
  return {};
}

// Extended precision: for n near 12 the closed-form terms reach n! and cancel
// down to the size of the integral, which costs about 8 digits in double.
using Wide = long double;

Wide to_wide(const Rational& r) {
  if (r.is_integer()) return std::strtold(r.numerator().get_str().c_str(), nullptr);
  return std::strtold(r.numerator().get_str().c_str(), nullptr) / std::strtold(r.denominator().get_str().c_str(), nullptr);
}

Wide horner(const Poly& p, Wide x) {
  Wide acc = 0.0L;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_wide(p.coeff(k).re());
  return acc;
}

Wide eval_wide(const ClosedForm& cf, double x) {
  const Wide wx = x;
  Wide value = to_wide(cf.constant);
  switch (cf.kind) {
    case Kind::Sin: value += horner(cf.main_part, wx) * std::cos(wx) + horner(cf.hat_part, wx) * std::sin(wx); break;
    case Kind::Cos: value += horner(cf.main_part, wx) * std::sin(wx) + horner(cf.hat_part, wx) * std::cos(wx); break;
    case Kind::Exp: value += horner(cf.main_part, wx) * std::exp(to_wide(cf.rate) * wx); break;
  }
  return value;
}

double checked(Wide value, double x) {
  const double d = static_cast<double>(value);
  if (!std::isfinite(d)) throw std::overflow_error("closed form is not finite at x = " + std::to_string(x));
  return d;
}

bool has_single_parity(const Poly& p, int parity) {
  for (int k = 0; k <= p.degree(); ++k) {
    if (!p.coeff(k).is_zero() && ((k % 2) + 2) % 2 != ((parity % 2) + 2) % 2) return false;
  }
  return true;
}

ExpPoly cf_or_zero(Kind kind, int n) { return n < 0 ? ExpPoly() : to_exp_poly(closed_form(kind, n)); }

ExpPoly xn_times(int n, const ExpPoly& b) {
  return n < 0 ? ExpPoly() : poly_times(Poly::monomial(GaussianRational(1), n), b);
}

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Exp: return "exp";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : {Kind::Sin, Kind::Cos, Kind::Exp}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

ClosedForm closed_form(Kind kind, int n, std::optional<Rational> m) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  ClosedForm cf;
  cf.kind = kind;
  cf.n = n;
  switch (kind) {
    case Kind::Sin:
      if (m) throw std::invalid_argument("rate m applies to the exp kind only");
      cf.main_part = s_explicit(n);
      cf.hat_part = shat(n - 1);
      break;
    case Kind::Cos:
      if (m) throw std::invalid_argument("rate m applies to the exp kind only");
      cf.main_part = c_from_s(n);
      cf.hat_part = chat(n - 1);
      break;
    case Kind::Exp:
      cf.rate = m.value_or(Rational(1));
      cf.main_part = antideriv_poly_exp(n, cf.rate);
      break;
  }
  return cf;
}

ExpPoly integrand(Kind kind, int n, const Rational& m) {
  return poly_times(Poly::monomial(GaussianRational(1), n), basis(kind, m));
}

ExpPoly to_exp_poly(const ClosedForm& cf) {
  ExpPoly f(LaurentPoly(Poly::constant(GaussianRational(cf.constant))));
  switch (cf.kind) {
    case Kind::Sin: return f + poly_times(cf.main_part, cos_x()) + poly_times(cf.hat_part, sin_x());
    case Kind::Cos: return f + poly_times(cf.main_part, sin_x()) + poly_times(cf.hat_part, cos_x());
    case Kind::Exp: return f + poly_times(cf.main_part, basis(Kind::Exp, cf.rate));
  }
  return f;
}

bool check_antiderivative(const ClosedForm& cf) {
  if (cf.kind == Kind::Exp && cf.rate.is_zero()) return false;
  return to_exp_poly(cf).derivative() == integrand(cf.kind, cf.n, cf.rate);
}

Poly s_rodrigues(int n) {
  if (n < 0) return {};
  const LaurentPoly inv_x = LaurentPoly::monomial(GaussianRational(1), -1);
  const auto d = static_cast<unsigned>(n);
  ExpPoly plus = ExpPoly::exp(-kI) * ExpPoly(kI, inv_x).nth_derivative(d);
  ExpPoly minus = ExpPoly::exp(kI) * ExpPoly(-kI, inv_x).nth_derivative(d);
  ExpPoly bracket = plus * GaussianRational(n % 2 == 0 ? 1 : -1) + minus;
  if (!bracket.is_zero() && (bracket.terms().size() != 1 || !bracket.terms().begin()->first.is_zero())) {
    throw std::logic_error("s_n Rodrigues form left a residual exponential");
  }
  LaurentPoly part = bracket.part(GaussianRational()).shifted(n + 1);
  if (!part.is_zero() && part.min_exponent() < 0) throw std::logic_error("s_n Rodrigues form left negative exponents");
  Poly s = part.to_poly() * (-GaussianRational::i_pow(n) * kHalf);
  if (!s.is_real()) throw std::logic_error("s_n Rodrigues form produced an imaginary residue");
  return s;
}

double eval_closed_form(const ClosedForm& cf, double x) { return checked(eval_wide(cf, x), x); }

double definite_integral(const ClosedForm& cf, double a, double b) {
  if (a == b) return 0.0;
  // Subtract before rounding; the endpoint values can be far larger than their difference.
  const Wide fb = eval_wide(cf, b);
  const Wide fa = eval_wide(cf, a);
  checked(fb, b);
  checked(fa, a);
  return static_cast<double>(fb - fa);
}

namespace {

template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F f, int max_depth) : f_(std::move(f)), max_depth_(max_depth) {}

  double eval(double x) {
    ++evaluations_;
    return f_(x);
  }

  double integrate(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
      error_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth_) throw QuadratureError("adaptive quadrature exceeded the maximum recursion depth");
    return integrate(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           integrate(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  double error() const { return error_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  F f_;
  int max_depth_;
  double error_ = 0.0;
  std::size_t evaluations_ = 0;
};

}  // namespace

QuadResult quad_adaptive(Kind kind, int n, const Rational& m, double a, double b, double tol, int max_depth) {
  if (!(a <= b)) throw std::invalid_argument("quadrature requires a <= b");
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (max_depth < 0) throw std::invalid_argument("maximum depth must be non-negative");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (kind == Kind::Exp && m.is_zero()) throw std::invalid_argument("rate must be nonzero");
  if (a == b) return {};

  const double rate = m.to_double();
  auto f = [kind, n, rate](double x) {
    double p = std::pow(x, n);
    switch (kind) {
      case Kind::Sin: return p * std::sin(x);
      case Kind::Cos: return p * std::cos(x);
      case Kind::Exp: return p * std::exp(rate * x);
    }
    return 0.0;
  };
  AdaptiveSimpson<decltype(f)> simpson(f, max_depth);

  // Tolerance scale from a 256-panel composite Simpson pass: relative to the
  // integral itself, floored at the roundoff level of summing |f|.
  constexpr int kPanels = 256;
  const double h = (b - a) / kPanels;
  double rough = 0.0;
  double l1 = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    const double x0 = a + k * h;
    const double f0 = simpson.eval(x0);
    const double f1 = simpson.eval(x0 + 0.5 * h);
    const double f2 = simpson.eval(x0 + h);
    rough += h / 6.0 * (f0 + 4.0 * f1 + f2);
    l1 += h / 6.0 * (std::abs(f0) + 4.0 * std::abs(f1) + std::abs(f2));
  }
  const double abs_tol =
      std::max(tol * std::max(1.0, std::abs(rough)), 50.0 * std::numeric_limits<double>::epsilon() * l1);

  // Start from a uniform partition: on a single coarse interval an oscillating
  // integrand can make the two Simpson estimates agree by accident.
  constexpr int kStartPanels = 16;
  const double w = (b - a) / kStartPanels;
  QuadResult r;
  for (int k = 0; k < kStartPanels; ++k) {
    // Neighbouring panels share one rounded edge, so no sliver is lost or counted twice.
    const double lo = a + k * w;
    const double hi = k + 1 == kStartPanels ? b : a + (k + 1) * w;
    const double fa = simpson.eval(lo);
    const double fm = simpson.eval(0.5 * (lo + hi));
    const double fb = simpson.eval(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    r.value += simpson.integrate(lo, hi, fa, fm, fb, whole, abs_tol / kStartPanels, 0);
  }
  r.est_error = simpson.error();
  r.evaluations = simpson.evaluations();
  return r;
}

Report check_theorem1(int n_max) {
  Report report;
  for (int n = 0; n <= n_max; ++n) {
    for (Kind kind : {Kind::Sin, Kind::Cos}) {
      ClosedForm cf = closed_form(kind, n);
      std::string k(kind_name(kind));
      report.add("d/dx closed_form(" + k + ") = x^n " + k + " x", n, check_antiderivative(cf));
      report.add("deg main(" + k + ") = n, deg hat(" + k + ") = n-1", n,
                 cf.main_part.degree() == n && cf.hat_part.degree() == n - 1);
      report.add("parity main(" + k + ") = n, parity hat(" + k + ") = n-1", n,
                 has_single_parity(cf.main_part, n) && has_single_parity(cf.hat_part, n - 1));
    }
    for (long m : {1L, 2L, -1L}) {
      report.add("d/dx closed_form(exp, m=" + std::to_string(m) + ") = x^n e^(mx)", n,
                 check_antiderivative(closed_form(Kind::Exp, n, Rational(m))));
    }
    report.add("d/dx closed_form(exp, m=1/2) = x^n e^(x/2)", n,
               check_antiderivative(closed_form(Kind::Exp, n, Rational(1, 2))));

    const ExpPoly s_n = cf_or_zero(Kind::Sin, n);
    const ExpPoly c_n = cf_or_zero(Kind::Cos, n);
    const GaussianRational nn(n);
    const GaussianRational nnm1(static_cast<long>(n) * (n - 1));
    report.add("S_n = -x^n cos x + n C_{n-1} + const", n,
               (s_n - (-xn_times(n, cos_x()) + cf_or_zero(Kind::Cos, n - 1) * nn)).is_constant());
    report.add("C_n = x^n sin x - n S_{n-1} + const", n,
               (c_n - (xn_times(n, sin_x()) - cf_or_zero(Kind::Sin, n - 1) * nn)).is_constant());
    report.add("S_n = -x^n cos x + n x^(n-1) sin x - n(n-1) S_{n-2} + const", n,
               (s_n - (-xn_times(n, cos_x()) + xn_times(n - 1, sin_x()) * nn - cf_or_zero(Kind::Sin, n - 2) * nnm1))
                   .is_constant());
    report.add("C_n = x^n sin x + n x^(n-1) cos x - n(n-1) C_{n-2} + const", n,
               (c_n - (xn_times(n, sin_x()) + xn_times(n - 1, cos_x()) * nn - cf_or_zero(Kind::Cos, n - 2) * nnm1))
                   .is_constant());
    report.add("s_rodrigues = s_explicit", n, s_rodrigues(n) == s_explicit(n));
  }
  return report;
}

}  // namespace sce
