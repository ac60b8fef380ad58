#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sce/poly.hpp"

using sce::ExpPoly;
using sce::GaussianRational;
using sce::LaurentPoly;
using sce::Poly;
using sce::Rational;

namespace {

const GaussianRational kI = GaussianRational::i();

Poly P(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

GaussianRational random_gauss(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Poly random_poly(std::mt19937& rng, int max_degree = 6) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<GaussianRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_gauss(rng);
  return Poly(std::move(c));
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> expo(-4, 4);
  LaurentPoly p;
  for (int k = 0; k < 4; ++k) p += LaurentPoly::monomial(random_gauss(rng), expo(rng));
  return p;
}

ExpPoly random_exp_poly(std::mt19937& rng) {
  const GaussianRational rates[] = {GaussianRational(0), GaussianRational(1), kI, -kI, GaussianRational(Rational(1, 2))};
  std::uniform_int_distribution<int> pick(0, 4);
  ExpPoly f;
  for (int k = 0; k < 3; ++k) f += ExpPoly(rates[pick(rng)], random_laurent(rng));
  return f;
}

}  // namespace

TEST_CASE("poly arithmetic") {
  CHECK(P({-1, 1}) + P({1}) == Poly::x());
  CHECK(P({-1, 1}) * P({1, 1}) == P({-1, 0, 1}));
  CHECK((Poly() * P({3, 2, 1})).is_zero());
  CHECK((P({1, 2}) - P({1, 2})).coeffs().empty());
  CHECK(P({0, 0, 0}).degree() == -1);
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK((P({1, 1}) * GaussianRational(0)).is_zero());
}

TEST_CASE("degree is additive under multiplication") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng);
    Poly q = random_poly(rng);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("poly derivative") {
  CHECK(P({2, -2, 1}).derivative() == P({-2, 2}));
  CHECK(P({7}).derivative().is_zero());
  CHECK(P({-1, 1}).derivative() == P({1}));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p = random_poly(rng);
    CHECK(p.derivative(p.degree() + 1).is_zero());
  }
}

TEST_CASE("poly evaluation") {
  const Poly e2 = P({2, -2, 1});
  CHECK(e2(GaussianRational(0)) == GaussianRational(2));
  CHECK(P({5, 3, 1})(GaussianRational(0)) == GaussianRational(5));
  CHECK(P({-1, 1})(kI) == GaussianRational(Rational(-1), Rational(1)));
}

TEST_CASE("argument scaling") {
  CHECK(P({0, 0, 1}).scale_arg(kI) == P({0, 0, -1}));
  const Poly e2 = P({2, -2, 1});
  CHECK(e2.scale_arg(GaussianRational(1)) == e2);
  CHECK(e2.scale_arg(kI) == Poly({GaussianRational(2), GaussianRational(Rational(0), Rational(-2)), GaussianRational(-1)}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p = random_poly(rng);
    CHECK(p.scale_arg(kI).scale_arg(kI) == p.scale_arg(GaussianRational(-1)));
    GaussianRational z = random_gauss(rng);
    GaussianRational c = random_gauss(rng);
    CHECK(p.scale_arg(c)(z) == p(c * z));
  }
}

TEST_CASE("laurent polynomials") {
  LaurentPoly inv = LaurentPoly::monomial(GaussianRational(1), -1);
  CHECK(inv.derivative() == LaurentPoly::monomial(GaussianRational(-1), -2));
  CHECK(inv.shifted(3).to_poly() == P({0, 0, 1}));
  CHECK_THROWS_AS(inv.to_poly(), std::domain_error);
  CHECK((inv - inv).is_zero());
  CHECK(LaurentPoly(P({1, 2})) * inv == LaurentPoly::monomial(GaussianRational(1), -1) + LaurentPoly(P({2})));
}

TEST_CASE("exp poly derivative examples") {
  const LaurentPoly inv = LaurentPoly::monomial(GaussianRational(1), -1);
  const ExpPoly seed(GaussianRational(1), inv);
  const LaurentPoly first = inv - LaurentPoly::monomial(GaussianRational(1), -2);
  CHECK(seed.derivative() == ExpPoly(GaussianRational(1), first));
  CHECK(ExpPoly::exp(GaussianRational(1)).derivative() == ExpPoly::exp(GaussianRational(1)));
  const Poly p = P({1, 4, 3});
  CHECK(ExpPoly(LaurentPoly(p)).derivative() == ExpPoly(LaurentPoly(p.derivative())));

  CHECK(seed.nth_derivative(0) == seed);
  CHECK(seed.nth_derivative(1) == ExpPoly(GaussianRational(1), first));
  const LaurentPoly second = inv + LaurentPoly::monomial(GaussianRational(-2), -2) + LaurentPoly::monomial(GaussianRational(2), -3);
  CHECK(seed.nth_derivative(2) == ExpPoly(GaussianRational(1), second));
}

TEST_CASE("exp poly terms cancel and merge") {
  ExpPoly f = ExpPoly::exp(kI) + ExpPoly::exp(-kI);
  CHECK(f.terms().size() == 2);
  CHECK((f - ExpPoly::exp(kI)).terms().size() == 1);
  CHECK((f - f).is_zero());
  // e^(ix) e^(-ix) = 1
  CHECK((ExpPoly::exp(kI) * ExpPoly::exp(-kI)).is_constant());
  CHECK(ExpPoly(LaurentPoly(P({3}))).is_constant());
  CHECK(!ExpPoly(LaurentPoly(P({3, 1}))).is_constant());
  CHECK(ExpPoly().is_constant());
}

TEST_CASE("exp poly derivative is linear and composes") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    ExpPoly f = random_exp_poly(rng);
    ExpPoly g = random_exp_poly(rng);
    GaussianRational c = random_gauss(rng);
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
    CHECK((f * c).derivative() == f.derivative() * c);
    // product rule
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    const unsigned a = static_cast<unsigned>(trial % 4);
    const unsigned b = static_cast<unsigned>((trial / 4) % 3);
    CHECK(f.nth_derivative(a + b) == f.nth_derivative(a).nth_derivative(b));
  }
}
