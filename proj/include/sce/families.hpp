#pragma once

// The polynomial families behind the integrals of x^n sin x, x^n cos x and
// x^n e^(m x), each built by every available route so the routes can be
// compared exactly.
//
// Every family accepts an integer index; a negative index yields the zero
// polynomial.

#include <optional>
#include <string_view>

#include "sce/exact.hpp"
#include "sce/poly.hpp"
#include "sce/report.hpp"

namespace sce {

enum class Family { E, S, C, SHat, CHat, EM };

struct FamilyId {
  Family tag = Family::E;
  int n = 0;
  std::optional<Rational> m;  // present iff tag == EM, nonzero
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Dispatches to the canonical route of each family. Throws
/// std::invalid_argument if m is missing or zero for EM.
Poly family_poly(const FamilyId& id);

// e_n: particular polynomial solution of y' + y = x^n.

/// x^n + sum_{l<n} (-1)^(l+n) n!/l! x^l
Poly e_explicit(int n);
/// e_n = x^n - n e_{n-1}, e_0 = 1
Poly e_recurrence(int n);
/// x^(n+1) e^(-x) d^n/dx^n (x^(-1) e^x). Throws std::logic_error if the
/// derivative does not strip to a plain polynomial.
Poly e_rodrigues(int n);
/// n! L_n^(-n-1)(-x)
Poly e_laguerre(int n);

/// Associated Laguerre polynomial for any rational order alpha:
/// sum_k (-1)^k C(n+alpha, n-k) x^k / k!.
Poly laguerre_general(int n, const Rational& alpha);

// e_n^(m): the rate-m generalization; e_n^(m)(x) = e_n(m x).
// All throw std::invalid_argument when m == 0.

Poly em_explicit(int n, const Rational& m);
/// x^(n+1) e^(-m x) d^n/dx^n (x^(-1) e^(m x))
Poly em_rodrigues(int n, const Rational& m);
/// The polynomial P with d/dx[P e^(m x)] = x^n e^(m x), i.e. e_n^(m) / m^(n+1).
Poly antideriv_poly_exp(int n, const Rational& m);

// s_n, c_n and the companion polynomials of the sin/cos integrals.

/// Explicit sum over l with l = n (mod 2) only.
Poly s_explicit(int n);
/// (i^n/2) [(-1)^(n+1) e_n(ix) - e_n(-ix)]. Throws std::logic_error on an imaginary residue.
Poly s_from_e(int n);
/// -s_n
Poly c_from_s(int n);
/// (i^n/2) [(-1)^n e_n(ix) + e_n(-ix)]. Throws std::logic_error on an imaginary residue.
Poly c_from_e(int n);
/// shat(k) = -d/dx s_{k+1}
Poly shat(int k);
/// chat(k) = d/dx c_{k+1}
Poly chat(int k);

enum class RelationGroup { G1, G2, G3, G4, DiffEqs };

/// Evaluates every identity of the group for n = 0..n_max.
Report check_relation_group(RelationGroup group, int n_max);

}  // namespace sce
