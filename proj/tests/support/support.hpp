#pragma once

// Helpers and independent oracles shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "exact/ratexpr.hpp"
#include "loopsym/partition.hpp"

namespace lsym::testing {

inline SparsePoly X(int site, long color, int n) {
  return SparsePoly::var(VarId::make(site, color, n));
}

inline RationalExpr XR(int site, long color, int n) { return RationalExpr(X(site, color, n)); }

/// Random point with coordinates in 1..hi for every x_i^(j), i <= m, j <= n.
inline Point random_point(std::mt19937_64& rng, int n, int m, long hi = 1000000) {
  std::uniform_int_distribution<long> dist(1, hi);
  Point p;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) p[VarId::make(i, j, n)] = Rational(dist(rng));
  return p;
}

/// Point giving every color of site i the same value vals[i-1].
inline Point collapsed_point(const std::vector<Rational>& vals, int n) {
  Point p;
  for (int i = 1; i <= static_cast<int>(vals.size()); ++i)
    for (int j = 1; j <= n; ++j) p[VarId::make(i, j, n)] = vals[i - 1];
  return p;
}

/// Coefficients of prod_i (1 + v_i t), i.e. classical e_0..e_m.
inline std::vector<Rational> classical_e_all(const std::vector<Rational>& v) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& x : v) {
    c.push_back(Rational(0));
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] += c[k - 1] * x;
  }
  return c;
}

/// Classical complete homogeneous h_k by brute-force multiset recursion.
inline Rational classical_h(int k, const std::vector<Rational>& v, std::size_t from = 0) {
  if (k == 0) return Rational(1);
  if (k < 0 || from >= v.size()) return Rational(0);
  // Either use v[from] at least once, or skip it.
  return v[from] * classical_h(k - 1, v, from) + classical_h(k, v, from + 1);
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Classical skew Schur s_{lam/mu}(v) via the h-form of Jacobi-Trudi.
inline Rational classical_skew_schur(const loop::Partition& lam, const loop::Partition& mu,
                                     const std::vector<Rational>& v) {
  const int l = lam.length();
  if (l == 0) return Rational(1);
  std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      a[i - 1][j - 1] = classical_h(lam.part(i) - mu.part(j) - i + j, v);
  return gauss_det(a);
}

/// Classical powersum.
inline Rational classical_p(int k, const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) {
    Rational t(1);
    for (int i = 0; i < k; ++i) t *= x;
    s += t;
  }
  return s;
}

inline std::vector<Rational> random_values(std::mt19937_64& rng, int m, long hi = 50) {
  std::uniform_int_distribution<long> dist(1, hi);
  std::vector<Rational> v;
  for (int i = 0; i < m; ++i) v.emplace_back(dist(rng));
  return v;
}

}  // namespace lsym::testing
