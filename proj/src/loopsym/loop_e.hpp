#pragma once

#include <map>
#include <utility>

#include "loopsym/matrix_poly.hpp"
#include "loopsym/var_array.hpp"

namespace lsym::loop {

/// e_k^(r): sum over i_1 < ... < i_k of x_{i_1}^(r) x_{i_2}^(r+1) ...
SparsePoly loop_e(const LoopVarArray& vars, int k, long r);

/// e_k^(r) evaluated in any semiring; sites[i-1][c-1] = x_i^(c).
template <class S>
S loop_e_eval(const std::vector<std::vector<S>>& sites, int k, long r) {
  using Tr = FieldTraits<S>;
  const int m = static_cast<int>(sites.size());
  if (k < 0 || k > m) return Tr::zero();
  std::vector<S> f(k + 1, Tr::zero());
  f[0] = Tr::one();
  for (int i = 1; i <= m; ++i) {
    const long n = static_cast<long>(sites[i - 1].size());
    for (int j = std::min(i, k); j >= 1; --j)
      f[j] = f[j] + f[j - 1] * sites[i - 1][canonical_color(r + j - 1, n) - 1];
  }
  return f[k];
}

/// p~_k = sum_i (x_i^(1) ... x_i^(n))^k.
SparsePoly loop_powersum(const LoopVarArray& vars, int k);

/// M(x_1) M(x_2) ... M(x_m) with polynomial coefficients.
MatrixPoly<SparsePoly> whirl_product(const LoopVarArray& vars);

/// Table keyed by (k, r).
template <class S>
using ETable = std::map<std::pair<int, int>, S>;

/// Reads e_k^(r) for 1 <= k <= max_k off the pattern
/// P_{r,c} = sum_j e^(r)_{c-r+jn} t^j.
template <class S, class IsZero, class IsOne>
ETable<S> extract_e(const MatrixPoly<S>& p, int max_k, IsZero&& is_zero, IsOne&& is_one) {
  const int n = p.n();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const S c0 = p.coeff(r, c, 0);
      if (r == c && !is_one(c0))
        fail(ErrorCode::MalformedMatrix, "diagonal constant term must be 1");
      if (c < r && !is_zero(c0))
        fail(ErrorCode::MalformedMatrix, "constant term below the diagonal must vanish");
    }
  ETable<S> out;
  for (int r = 1; r <= n; ++r)
    for (int k = 1; k <= max_k; ++k) {
      // Unique column c in 1..n with c - r = k (mod n).
      const int c = static_cast<int>(canonical_color(r + k, n));
      const int j = (k - (c - r)) / n;
      out[{k, r}] = p.coeff(r - 1, c - 1, j);
    }
  return out;
}

ETable<SparsePoly> extract_e(const MatrixPoly<SparsePoly>& p, int max_k);

/// Highway path sum from wire from_wire to wire to_wire. wraps counts the
/// steps the path takes off its current wire divided by n, rounded up: the
/// result is e^(from)_k with to = from + k (mod n) and wraps = ceil(k / n).
SparsePoly boundary_measurement(const LoopVarArray& vars, int from_wire, int to_wire,
                                int wraps);

/// Sum over sites of the closed walk through every color, taken wraps times.
SparsePoly cycle_measurement(const LoopVarArray& vars, int wraps);

}  // namespace lsym::loop
