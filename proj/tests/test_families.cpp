#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sce/families.hpp"

using sce::GaussianRational;
using sce::Poly;
using sce::Rational;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly PQ(std::initializer_list<Rational> c) {
  std::vector<GaussianRational> v;
  for (const auto& x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

const Rational kRates[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 5)};

}  // namespace

TEST_CASE("oracles reproduce the frozen low-order values") {
  CHECK(oracle::e_neumann(3) == P({-6, 6, -3, 1}));
  CHECK(oracle::s_neumann(2) == P({2, 0, -1}));
  CHECK(oracle::s_neumann(3) == P({0, 6, 0, -1}));
  CHECK(oracle::exp_antideriv_neumann(1, Rational(2)) == PQ({Rational(-1, 4), Rational(1, 2)}));
}

TEST_CASE("e_n explicit form") {
  CHECK(sce::e_explicit(0) == P({1}));
  CHECK(sce::e_explicit(1) == P({-1, 1}));
  CHECK(sce::e_explicit(2) == P({2, -2, 1}));
  CHECK(sce::e_explicit(3) == P({-6, 6, -3, 1}));
  for (int n = 0; n <= 30; ++n) {
    const Poly e = sce::e_explicit(n);
    CHECK(e == oracle::e_neumann(n));
    CHECK(e.coeff(n) == GaussianRational(1));
    CHECK(e.coeff(0) == GaussianRational(Rational(sce::factorial(static_cast<unsigned>(n)) * (n % 2 == 0 ? 1 : -1))));
  }
}

TEST_CASE("e_n routes agree") {
  CHECK(sce::e_recurrence(0) == P({1}));
  CHECK(sce::e_recurrence(2) == P({2, -2, 1}));
  CHECK(sce::e_rodrigues(0) == P({1}));
  CHECK(sce::e_rodrigues(1) == P({-1, 1}));
  CHECK(sce::e_rodrigues(2) == P({2, -2, 1}));
  CHECK(sce::e_laguerre(0) == P({1}));
  CHECK(sce::e_laguerre(1) == P({-1, 1}));
  for (int n = 0; n <= 30; ++n) {
    const Poly e = sce::e_explicit(n);
    CHECK(sce::e_recurrence(n) == e);
    CHECK(sce::e_rodrigues(n) == e);
    CHECK(sce::e_laguerre(n) == e);
    if (n > 0) CHECK(e.derivative() == GaussianRational(n) * sce::e_explicit(n - 1));
  }
}

TEST_CASE("negative indices give the zero polynomial") {
  for (int n = -3; n < 0; ++n) {
    CHECK(sce::e_explicit(n).is_zero());
    CHECK(sce::e_recurrence(n).is_zero());
    CHECK(sce::e_rodrigues(n).is_zero());
    CHECK(sce::s_explicit(n).is_zero());
    CHECK(sce::c_from_e(n).is_zero());
    CHECK(sce::shat(n).is_zero());
    CHECK(sce::chat(n).is_zero());
    CHECK(sce::em_explicit(n, Rational(2)).is_zero());
  }
}

TEST_CASE("associated Laguerre polynomials") {
  const Rational alpha(3, 7);
  CHECK(sce::laguerre_general(0, alpha) == P({1}));
  CHECK(sce::laguerre_general(1, alpha) == PQ({alpha + Rational(1), Rational(-1)}));
  CHECK(sce::laguerre_general(2, Rational(-3)).scale_arg(GaussianRational(-1)) * GaussianRational(2) == P({2, -2, 1}));
  const Poly x = Poly::x();
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(-5, 2), Rational(4)}) {
    for (int n = 0; n <= 15; ++n) {
      const Poly l = sce::laguerre_general(n, a);
      CHECK(l == oracle::laguerre_recurrence(n, a));
      const Poly b = PQ({a + Rational(1), Rational(-1)});
      CHECK((x * l.derivative(2) + b * l.derivative() + GaussianRational(n) * l).is_zero());
    }
  }
}

TEST_CASE("rate-m generalization") {
  const Rational m(5, 3);
  const GaussianRational gm(m);
  CHECK(sce::em_explicit(1, m) == Poly({GaussianRational(-1), gm}));
  CHECK(sce::em_explicit(2, m) == Poly({GaussianRational(2), gm * GaussianRational(-2), gm * gm}));
  CHECK(sce::em_explicit(2, Rational(1)) == P({2, -2, 1}));
  CHECK(sce::em_rodrigues(1, m) == Poly({GaussianRational(-1), gm}));
  CHECK(sce::em_rodrigues(0, m) == P({1}));
  CHECK(sce::em_rodrigues(3, Rational(2)) == sce::em_explicit(3, Rational(2)));
  for (const auto& r : kRates) {
    for (int n = 0; n <= 30; ++n) {
      const Poly em = sce::em_explicit(n, r);
      CHECK(sce::em_rodrigues(n, r) == em);
      CHECK(em == sce::e_explicit(n).scale_arg(GaussianRational(r)));
    }
  }
}

TEST_CASE("rate-m first-order identity carries the m^(n+1) factor") {
  for (const auto& r : kRates) {
    const GaussianRational gm(r);
    for (int n = 0; n <= 20; ++n) {
      const Poly em = sce::em_explicit(n, r);
      CHECK(em.derivative() + gm * em == GaussianRational(sce::pow(r, n + 1)) * oracle::xn(n));
      if (sce::abs(r) != Rational(1)) CHECK(em.derivative() + gm * em != oracle::xn(n));
    }
  }
  // e_1^(m) = m x - 1 gives m^2 x on the left-hand side
  const Poly e1 = sce::em_explicit(1, Rational(3));
  CHECK(e1.derivative() + GaussianRational(3) * e1 == P({0, 9}));
}

TEST_CASE("polynomial antiderivative of x^n e^(mx)") {
  CHECK(sce::antideriv_poly_exp(0, Rational(1)) == P({1}));
  CHECK(sce::antideriv_poly_exp(1, Rational(1)) == P({-1, 1}));
  CHECK(sce::antideriv_poly_exp(1, Rational(2)) == PQ({Rational(-1, 4), Rational(1, 2)}));
  for (const auto& r : kRates) {
    for (int n = 0; n <= 30; ++n) {
      const Poly p = sce::antideriv_poly_exp(n, r);
      CHECK(p == oracle::exp_antideriv_neumann(n, r));
      CHECK(p.derivative() + GaussianRational(r) * p == oracle::xn(n));
    }
  }
}

TEST_CASE("zero rate is rejected") {
  CHECK_THROWS_AS(sce::em_explicit(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(sce::em_rodrigues(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(sce::antideriv_poly_exp(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(sce::family_poly({sce::Family::EM, 2, std::nullopt}), std::invalid_argument);
}

TEST_CASE("s_n and c_n") {
  CHECK(sce::s_explicit(0) == P({-1}));
  CHECK(sce::s_explicit(1) == P({0, -1}));
  CHECK(sce::s_explicit(2) == P({2, 0, -1}));
  CHECK(sce::s_explicit(3) == P({0, 6, 0, -1}));
  CHECK(sce::s_from_e(0) == P({-1}));
  CHECK(sce::s_from_e(2) == P({2, 0, -1}));
  CHECK(sce::s_from_e(5) == sce::s_explicit(5));
  CHECK(sce::c_from_s(0) == P({1}));
  CHECK(sce::c_from_s(1) == P({0, 1}));
  CHECK(sce::c_from_s(2) == P({-2, 0, 1}));
  CHECK(sce::c_from_e(0) == P({1}));
  CHECK(sce::c_from_e(1) == P({0, 1}));
  CHECK(sce::c_from_e(3) == -sce::s_explicit(3));
  for (int n = 0; n <= 30; ++n) {
    const Poly s = sce::s_explicit(n);
    CHECK(s == oracle::s_neumann(n));
    CHECK(s.coeff(n) == GaussianRational(-1));
    for (int k = 0; k <= n; ++k) {
      if ((n - k) % 2 != 0) CHECK(s.coeff(k).is_zero());
    }
    CHECK(sce::s_from_e(n) == s);
    CHECK(sce::s_from_e(n).is_real());
    CHECK(sce::c_from_e(n).is_real());
    CHECK(sce::c_from_e(n) == -s);
  }
}

TEST_CASE("companion polynomials") {
  CHECK(sce::shat(-1).is_zero());
  CHECK(sce::shat(0) == P({1}));
  CHECK(sce::shat(1) == P({0, 2}));
  CHECK(sce::chat(-1).is_zero());
  CHECK(sce::chat(0) == P({1}));
  CHECK(sce::chat(1) == P({0, 2}));
  for (int k = 0; k <= 30; ++k) {
    CHECK(sce::shat(k) == sce::chat(k));
    CHECK(sce::shat(k).degree() == k);
  }
}

TEST_CASE("relation groups") {
  // G2 at n = 2 by hand: s_2 = -x^2 - 2 s_0
  CHECK(sce::s_explicit(2) == -oracle::xn(2) - GaussianRational(2) * sce::s_explicit(0));
  // G1 at n = 0: s_0 = -1
  CHECK(sce::s_explicit(0) == -oracle::xn(0));
  // DIFF_EQS at n = 5
  const Poly e5 = sce::e_explicit(5);
  CHECK((e5.derivative() + e5 - oracle::xn(5)).is_zero());

  for (auto g : {sce::RelationGroup::G1, sce::RelationGroup::G2, sce::RelationGroup::G3, sce::RelationGroup::G4,
                 sce::RelationGroup::DiffEqs}) {
    const sce::Report r = sce::check_relation_group(g, 30);
    CHECK(!r.results().empty());
    CHECK(r.all_passed());
  }
}

TEST_CASE("family dispatch") {
  CHECK(sce::parse_family("shat") == sce::Family::SHat);
  CHECK(!sce::parse_family("bogus").has_value());
  CHECK(sce::family_poly({sce::Family::C, 2, std::nullopt}) == P({-2, 0, 1}));
  CHECK(sce::family_poly({sce::Family::EM, 1, Rational(3)}) == P({-1, 3}));
}
