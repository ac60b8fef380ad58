#pragma once

// Closed-form antiderivatives of x^n sin x, x^n cos x and x^n e^(m x), their
// exact symbolic verification, and a floating-point evaluation path checked
// against an independent adaptive quadrature.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "sce/exact.hpp"
#include "sce/poly.hpp"
#include "sce/report.hpp"

namespace sce {

enum class Kind { Sin, Cos, Exp };

std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);

/// Antiderivative of x^n * basis(x):
///   Sin:  main * cos x + hat * sin x + constant  (main = s_n, hat = shat_{n-1})
///   Cos:  main * sin x + hat * cos x + constant  (main = c_n, hat = chat_{n-1})
///   Exp:  main * e^(rate x) + constant           (main = e_n^(m) / m^(n+1), hat = 0)
struct ClosedForm {
  Kind kind = Kind::Exp;
  int n = 0;
  Rational rate{1};  // Exp only
  Poly main_part;
  Poly hat_part;
  Rational constant;
};

/// Throws std::invalid_argument for n < 0, m == 0, or m given for Sin/Cos.
ClosedForm closed_form(Kind kind, int n, std::optional<Rational> m = std::nullopt);

/// x^n * {sin x | cos x | e^(m x)} with the trig functions lifted to e^(+-ix).
ExpPoly integrand(Kind kind, int n, const Rational& m = Rational(1));
ExpPoly to_exp_poly(const ClosedForm& cf);

/// Exact: d/dx of the closed form equals the integrand.
bool check_antiderivative(const ClosedForm& cf);

/// s_n via the Rodrigues-type formula built from the two complex rates +-i.
/// Throws std::logic_error if an imaginary or non-polynomial residue remains.
Poly s_rodrigues(int n);

/// Evaluated in extended precision and rounded once. Throws std::overflow_error
/// if the value is not finite in double.
double eval_closed_form(const ClosedForm& cf, double x);
/// eval(b) - eval(a).
double definite_integral(const ClosedForm& cf, double a, double b);

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute, >= 0
  std::size_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kQuadMaxDepth = 50;

/// Adaptive Simpson with Richardson correction on x^n * basis over [a, b].
/// The absolute target is tol * max(1, |integral|), but never below the
/// roundoff floor 50 eps * (integral of |f|); both are estimated up front and
/// est_error is absolute. Throws std::invalid_argument
/// for a > b, tol <= 0 or max_depth < 0, QuadratureError past max_depth levels.
QuadResult quad_adaptive(Kind kind, int n, const Rational& m, double a, double b, double tol = 1e-12,
                         int max_depth = kQuadMaxDepth);

/// Symbolic checks on the closed forms for n = 0..n_max: antiderivative for
/// all kinds, degree and parity structure, and the integration-by-parts
/// recurrences between S_n and C_n up to a constant.
Report check_theorem1(int n_max);

}  // namespace sce
