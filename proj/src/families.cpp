#include "sce/families.hpp"

#include <stdexcept>
#include <string>

namespace sce {

namespace {

void require_rate(const Rational& m) {
  if (m.is_zero()) throw std::invalid_argument("rate must be nonzero");
}

Poly xn(int n) { return n < 0 ? Poly() : Poly::monomial(GaussianRational(1), n); }

GaussianRational sign_pow(int k) { return GaussianRational((k % 2 == 0) ? 1 : -1); }

GaussianRational scalar(long v) { return GaussianRational(v); }

// x^(n+1) e^(-rate x) d^n/dx^n (x^(-1) e^(rate x))
Poly rodrigues_strip(int n, const GaussianRational& rate) {
  ExpPoly seed(rate, LaurentPoly::monomial(GaussianRational(1), -1));
  ExpPoly d = seed.nth_derivative(static_cast<unsigned>(n));
  if (d.terms().size() != 1 || !(d.terms().begin()->first == rate)) {
    throw std::logic_error("Rodrigues derivative left a mixed-rate exponential polynomial");
  }
  LaurentPoly scaled = d.terms().begin()->second.shifted(n + 1);
  if (scaled.min_exponent() < 0) throw std::logic_error("Rodrigues derivative left negative exponents");
  return scaled.to_poly();
}

Poly require_real(Poly p, const char* what) {
  if (!p.is_real()) throw std::logic_error(std::string(what) + " produced an imaginary residue");
  return p;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::E: return "e";
    case Family::S: return "s";
    case Family::C: return "c";
    case Family::SHat: return "shat";
    case Family::CHat: return "chat";
    case Family::EM: return "em";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::E, Family::S, Family::C, Family::SHat, Family::CHat, Family::EM}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Poly family_poly(const FamilyId& id) {
  switch (id.tag) {
    case Family::E: return e_explicit(id.n);
    case Family::S: return s_explicit(id.n);
    case Family::C: return c_from_s(id.n);
    case Family::SHat: return shat(id.n);
    case Family::CHat: return chat(id.n);
    case Family::EM:
      if (!id.m) throw std::invalid_argument("family em requires a rate m");
      return em_explicit(id.n, *id.m);
  }
  throw std::invalid_argument("unknown family");
}

Poly e_explicit(int n) { return n < 0 ? Poly() : em_explicit(n, Rational(1)); }

Poly e_recurrence(int n) {
  if (n < 0) return {};
  Poly e = Poly::constant(scalar(1));
  for (int k = 1; k <= n; ++k) e = xn(k) - scalar(k) * e;
  return e;
}

Poly e_rodrigues(int n) {
  if (n < 0) return {};
  return rodrigues_strip(n, scalar(1));
}

Poly e_laguerre(int n) {
  if (n < 0) return {};
  Poly l = laguerre_general(n, Rational(-n - 1)).scale_arg(scalar(-1));
  return l * GaussianRational(Rational(factorial(static_cast<unsigned>(n))));
}

Poly laguerre_general(int n, const Rational& alpha) {
  if (n < 0) return {};
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  Rational top = Rational(n) + alpha;
  for (int k = 0; k <= n; ++k) {
    Rational v = binomial_general(top, static_cast<unsigned>(n - k)) /
                 Rational(factorial(static_cast<unsigned>(k)));
    c[static_cast<std::size_t>(k)] = k % 2 == 0 ? v : -v;
  }
  return Poly(std::move(c));
}

Poly em_explicit(int n, const Rational& m) {
  require_rate(m);
  if (n < 0) return {};
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  Rational n_fact(factorial(static_cast<unsigned>(n)));
  Rational m_pow(1);
  for (int l = 0; l < n; ++l) {
    Rational v = m_pow * n_fact / Rational(factorial(static_cast<unsigned>(l)));
    c[static_cast<std::size_t>(l)] = (l + n) % 2 == 0 ? v : -v;
    m_pow *= m;
  }
  c[static_cast<std::size_t>(n)] = m_pow;
  return Poly(std::move(c));
}

Poly em_rodrigues(int n, const Rational& m) {
  require_rate(m);
  if (n < 0) return {};
  return rodrigues_strip(n, GaussianRational(m));
}

Poly antideriv_poly_exp(int n, const Rational& m) {
  require_rate(m);
  if (n < 0) return {};
  return em_explicit(n, m) * GaussianRational(pow(m, -(n + 1)));
}

Poly s_explicit(int n) {
  if (n < 0) return {};
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = scalar(-1);
  Rational n_fact(factorial(static_cast<unsigned>(n)));
  // Even n carries an extra sign flip relative to odd n.
  const int offset = n % 2 == 0 ? 1 : 0;
  for (int l = n - 2; l >= 0; l -= 2) {
    Rational v = n_fact / Rational(factorial(static_cast<unsigned>(l)));
    c[static_cast<std::size_t>(l)] = ((l + n) / 2 + offset) % 2 == 0 ? v : -v;
  }
  return Poly(std::move(c));
}

Poly s_from_e(int n) {
  if (n < 0) return {};
  Poly e = e_explicit(n);
  GaussianRational half_in = GaussianRational::i_pow(n) * GaussianRational(Rational(1, 2));
  Poly r = (sign_pow(n + 1) * e.scale_arg(GaussianRational::i()) - e.scale_arg(-GaussianRational::i())) * half_in;
  return require_real(std::move(r), "s_n from e_n");
}

Poly c_from_s(int n) { return -s_explicit(n); }

Poly c_from_e(int n) {
  if (n < 0) return {};
  Poly e = e_explicit(n);
  GaussianRational half_in = GaussianRational::i_pow(n) * GaussianRational(Rational(1, 2));
  Poly r = (sign_pow(n) * e.scale_arg(GaussianRational::i()) + e.scale_arg(-GaussianRational::i())) * half_in;
  return require_real(std::move(r), "c_n from e_n");
}

Poly shat(int k) { return k < 0 ? Poly() : -s_explicit(k + 1).derivative(); }

Poly chat(int k) { return k < 0 ? Poly() : c_from_e(k + 1).derivative(); }

Report check_relation_group(RelationGroup group, int n_max) {
  Report report;
  for (int n = 0; n <= n_max; ++n) {
    const GaussianRational nn = scalar(n);
    const GaussianRational n1 = scalar(n + 1);
    const GaussianRational nnm1 = scalar(static_cast<long>(n) * (n - 1));
    const GaussianRational nnp1 = scalar(static_cast<long>(n) * (n + 1));
    switch (group) {
      case RelationGroup::G1:
        report.add("s_n = -x^n + n chat_{n-2}", n, s_explicit(n) == -xn(n) + nn * chat(n - 2));
        report.add("shat_n = (n+1) c_n", n, shat(n) == n1 * c_from_e(n));
        break;
      case RelationGroup::G2:
        report.add("s_n = -x^n - n(n-1) s_{n-2}", n, s_explicit(n) == -xn(n) - nnm1 * s_explicit(n - 2));
        report.add("shat_n = (n+1) x^n - n(n+1) shat_{n-2}", n, shat(n) == n1 * xn(n) - nnp1 * shat(n - 2));
        break;
      case RelationGroup::G3:
        report.add("c_n = x^n - n shat_{n-2}", n, c_from_e(n) == xn(n) - nn * shat(n - 2));
        report.add("chat_n = -(n+1) s_n", n, chat(n) == -(n1 * s_explicit(n)));
        break;
      case RelationGroup::G4:
        report.add("c_n = x^n - n(n-1) c_{n-2}", n, c_from_e(n) == xn(n) - nnm1 * c_from_e(n - 2));
        report.add("chat_n = (n+1) x^n - n(n+1) chat_{n-2}", n, chat(n) == n1 * xn(n) - nnp1 * chat(n - 2));
        break;
      case RelationGroup::DiffEqs: {
        Poly s = s_explicit(n);
        Poly c = c_from_e(n);
        Poly e = e_explicit(n);
        report.add("s_n'' + s_n = -x^n", n, s.derivative(2) + s == -xn(n));
        report.add("c_n'' + c_n = x^n", n, c.derivative(2) + c == xn(n));
        report.add("e_n' + e_n = x^n", n, e.derivative() + e == xn(n));
        report.add("c_n = x^n + n s_{n-1}'", n, c == xn(n) + nn * s_explicit(n - 1).derivative());
        report.add("c_n' = -n s_{n-1}", n, c.derivative() == -(nn * s_explicit(n - 1)));
        break;
      }
    }
  }
  return report;
}

}  // namespace sce
