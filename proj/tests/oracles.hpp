#pragma once

// Test-only reference constructions. Each one reaches its answer by a path
// that shares nothing with the library route it is compared against beyond
// Poly arithmetic and differentiation.

#include <vector>

#include "sce/poly.hpp"

namespace oracle {

using sce::GaussianRational;
using sce::Poly;
using sce::Rational;

inline Poly xn(int n) { return Poly::monomial(GaussianRational(1), n); }

/// y' + y = x^n via (1 + D)^(-1) = sum_k (-D)^k, finite on polynomials.
inline Poly e_neumann(int n) {
  Poly acc;
  Poly d = xn(n);
  for (int k = 0; !d.is_zero(); ++k, d = d.derivative()) acc += (k % 2 == 0) ? d : -d;
  return acc;
}

/// y' + m y = x^n via (m + D)^(-1) = sum_k (-1)^k D^k / m^(k+1).
inline Poly exp_antideriv_neumann(int n, const Rational& m) {
  Poly acc;
  Poly d = xn(n);
  for (int k = 0; !d.is_zero(); ++k, d = d.derivative()) {
    Rational c = sce::pow(m, -(k + 1));
    acc += d * GaussianRational(k % 2 == 0 ? c : -c);
  }
  return acc;
}

/// y'' + y = -x^n via -(1 + D^2)^(-1) = -sum_k (-D^2)^k.
inline Poly s_neumann(int n) {
  Poly acc;
  Poly d = xn(n);
  for (int k = 0; !d.is_zero(); ++k, d = d.derivative(2)) acc -= (k % 2 == 0) ? d : -d;
  return acc;
}

/// Three-term recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
inline Poly laguerre_recurrence(int n, const Rational& alpha) {
  Poly prev = Poly::constant(GaussianRational(1));
  if (n == 0) return prev;
  Poly cur({GaussianRational(alpha + Rational(1)), GaussianRational(-1)});
  for (int k = 1; k < n; ++k) {
    Poly lin({GaussianRational(Rational(2 * k + 1) + alpha), GaussianRational(-1)});
    Poly next = (lin * cur - prev * GaussianRational(Rational(k) + alpha)) * GaussianRational(Rational(1, k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// (x + 1)^n by Pascal's triangle.
inline Poly x_plus_one_pow(int n) {
  std::vector<long> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<long> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  std::vector<GaussianRational> c;
  for (long v : row) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace oracle
