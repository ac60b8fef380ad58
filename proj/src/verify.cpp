#include "sce/verify.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "sce/families.hpp"
#include "sce/genfunc.hpp"
#include "sce/integrals.hpp"

namespace sce {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {"routes",   "recurrences", "odes",     "genfunc",
                                                     "laguerre", "theorem1",    "theorem2", "all"};

const std::array<Rational, 5> kRates = {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 5)};

Poly xn(int n) { return Poly::monomial(GaussianRational(1), n); }
GaussianRational g(const Rational& r) { return GaussianRational(r); }
GaussianRational fact(int n) { return g(Rational(factorial(static_cast<unsigned>(n)))); }

Report routes(int max_n) {
  Report r;
  for (int n = 0; n <= max_n; ++n) {
    const Poly e = e_explicit(n);
    r.add("e_explicit = e_recurrence", n, e == e_recurrence(n));
    r.add("e_explicit = e_rodrigues", n, e == e_rodrigues(n));
    r.add("e_explicit = e_laguerre", n, e == e_laguerre(n));
    r.add("e_n(0) = (-1)^n n!", n, e(GaussianRational()) == fact(n) * GaussianRational(n % 2 == 0 ? 1 : -1));
    r.add("e_n' = n e_{n-1}", n, e.derivative() == GaussianRational(n) * e_explicit(n - 1));
    bool em_ok = true;
    for (const auto& m : kRates) em_ok = em_ok && em_explicit(n, m) == em_rodrigues(n, m);
    r.add("em_explicit = em_rodrigues (m in {1,2,-1,1/2,-3/5})", n, em_ok);
    r.add("em_explicit(n, 1) = e_explicit", n, em_explicit(n, Rational(1)) == e);
    const Poly s = s_explicit(n);
    r.add("s_explicit = s_from_e", n, s == s_from_e(n));
    r.add("s_explicit = s_rodrigues", n, s == s_rodrigues(n));
    r.add("c_from_s = c_from_e", n, c_from_s(n) == c_from_e(n));
    r.add("shat_n = chat_n", n, shat(n) == chat(n));
  }
  return r;
}

Report recurrences(int max_n) {
  Report r;
  for (RelationGroup grp : {RelationGroup::G1, RelationGroup::G2, RelationGroup::G3, RelationGroup::G4}) {
    r.append(check_relation_group(grp, max_n));
  }
  return r;
}

Report odes(int max_n) {
  Report r = check_relation_group(RelationGroup::DiffEqs, max_n);
  const Poly x = Poly::x();
  for (int n = 0; n <= max_n; ++n) {
    const Poly e = e_explicit(n);
    const GaussianRational nn(n);
    r.add("x e'' + (x - n) e' - n e = 0", n,
          (x * e.derivative(2) + (x - Poly::constant(nn)) * e.derivative() - nn * e).is_zero());
    bool hyper = true;
    bool corrected = true;
    bool antideriv = true;
    for (const auto& m : kRates) {
      const Poly em = em_explicit(n, m);
      const Poly mx_n = Poly({-nn, g(m)});
      hyper = hyper && (x * em.derivative(2) + mx_n * em.derivative() - g(m) * nn * em).is_zero();
      corrected = corrected && em.derivative() + g(m) * em == g(pow(m, n + 1)) * xn(n);
      const Poly p = antideriv_poly_exp(n, m);
      antideriv = antideriv && p.derivative() + g(m) * p == xn(n);
    }
    r.add("x em'' + (mx - n) em' - mn em = 0", n, hyper);
    r.add("em' + m em = m^(n+1) x^n", n, corrected);
    r.add("P' + m P = x^n for P = antideriv_poly_exp", n, antideriv);
    bool general = true;
    for (const Rational& c : {Rational(0), Rational(1), Rational(-2, 3)}) {
      ExpPoly y = ExpPoly(LaurentPoly(e)) + ExpPoly::exp(GaussianRational(-1)) * g(c);
      general = general && y.derivative() + y == ExpPoly(LaurentPoly(xn(n)));
    }
    r.add("y = e_n + C e^(-x) solves y' + y = x^n", n, general);
  }
  return r;
}

Report genfunc(int order) {
  Report r;
  const FormalSeries e = series_E(order);
  const FormalSeries s = series_S(order);
  const FormalSeries c = series_C(order);
  const FormalSeries ext = series_exp_xt(Rational(1), order);
  const FormalSeries e_ode = e.partial_x() + e;
  const FormalSeries s_ode = s.partial_x().partial_x() + s;
  for (int n = 0; n <= order; ++n) {
    r.add("n! [t^n] E = e_n", n, e.coeff(n) * fact(n) == e_explicit(n));
    r.add("n! [t^n] S = s_n", n, s.coeff(n) * fact(n) == s_explicit(n));
    r.add("n! [t^n] C = c_n", n, c.coeff(n) * fact(n) == c_from_s(n));
    r.add("dE/dx + E = e^(xt)", n, e_ode.coeff(n) == ext.coeff(n));
    r.add("d2S/dx2 + S = -e^(xt)", n, s_ode.coeff(n) == -ext.coeff(n));
  }
  for (const auto& m : kRates) {
    const FormalSeries em = series_Em(m, order);
    for (int n = 0; n <= order; ++n) {
      r.add("n! [t^n] E^(m) = e_n^(m), m = " + m.to_string(), n, em.coeff(n) * fact(n) == em_explicit(n, m));
    }
  }
  r.append(series_connection_check(order));
  return r;
}

Report laguerre(int max_n) {
  Report r;
  const Poly x = Poly::x();
  for (int n = 0; n <= max_n; ++n) {
    r.add("e_n = n! L_n^(-n-1)(-x)", n, e_laguerre(n) == e_explicit(n));
    bool ode = true;
    for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(3), Rational(-n - 1), Rational(-7, 3)}) {
      const Poly l = laguerre_general(n, alpha);
      const Poly b = Poly({g(alpha + Rational(1)), GaussianRational(-1)});
      ode = ode && (x * l.derivative(2) + b * l.derivative() + GaussianRational(n) * l).is_zero();
    }
    r.add("x L'' + (alpha + 1 - x) L' + n L = 0", n, ode);
  }
  return r;
}

Report theorem2(int order) {
  Report r;
  const LinearHGSpec e_spec = LinearHGSpec::for_e();
  const LinearHGSpec shifted{1, 1, -1, 0, -1};
  r.add("degenerate: e_n spec", 0, nu_degeneracy_check(e_spec));
  r.add("degenerate: (-1)^n (x+1)^n spec", 0, nu_degeneracy_check(shifted));
  bool laguerre_classical = true;
  for (const Rational& a : {Rational(0), Rational(1), Rational(1, 2), Rational(-5)}) {
    laguerre_classical = laguerre_classical && !nu_degeneracy_check(LinearHGSpec::for_laguerre(a));
  }
  r.add("not degenerate: Laguerre spec", 0, laguerre_classical);
  for (int n = 0; n <= order; ++n) {
    r.add("rho(e_n spec) = x^(-n-1) e^x", n, rho_linear(e_spec, n) == RhoForm{1, 0, Rational(-n - 1), 1});
    r.add("sigma(e_n spec) = x^(-1) e^x", n, sigma_linear(e_spec, n) == RhoForm{1, 0, -1, 1});
    r.add("lambda_n(e_n spec) = -n", n, e_spec.lambda(n) == Rational(-n));
  }
  const FormalSeries t2 = theorem2_genfunc(e_spec, order);
  const FormalSeries e = series_E(order);
  const FormalSeries shifted_series = theorem2_genfunc(shifted, order);
  const Poly x_plus_1({GaussianRational(1), GaussianRational(1)});
  for (int n = 0; n <= order; ++n) {
    r.add("sigma genfunc (e_n spec) = e^(xt)/(1+t)", n, t2.coeff(n) == e.coeff(n));
    r.add("n! [t^n] sigma genfunc (shifted spec) = (-1)^n (x+1)^n", n,
          shifted_series.coeff(n) * fact(n) == x_plus_1.pow(static_cast<unsigned>(n)) * GaussianRational(n % 2 == 0 ? 1 : -1));
  }
  for (const auto& m : kRates) {
    const LinearHGSpec spec = LinearHGSpec::for_em(m);
    const FormalSeries tm = theorem2_genfunc(spec, order);
    const FormalSeries em = series_Em(m, order);
    bool same = true;
    for (int n = 0; n <= order; ++n) same = same && tm.coeff(n) == em.coeff(n);
    r.add("sigma genfunc (e_n^(m) spec) = e^(mxt)/(1+t), m = " + m.to_string(), order, same);
    r.add("lambda_n(e_n^(m) spec) = -mn, m = " + m.to_string(), order,
          spec.lambda(order) == -(m * Rational(order)));
  }
  return r;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

Report run_suite(std::string_view suite, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  if (suite == "routes") return routes(max_n);
  if (suite == "recurrences") return recurrences(max_n);
  if (suite == "odes") return odes(max_n);
  if (suite == "genfunc") return genfunc(max_n);
  if (suite == "laguerre") return laguerre(max_n);
  if (suite == "theorem1") return check_theorem1(max_n);
  if (suite == "theorem2") return theorem2(max_n);
  if (suite == "all") {
    Report r;
    for (auto name : kSuites) {
      if (name != "all") r.append(run_suite(name, max_n));
    }
    return r;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace sce
