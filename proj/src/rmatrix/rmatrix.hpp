#pragma once

#include <string>
#include <vector>

#include "common/error.hpp"
#include "exact/det.hpp"
#include "exact/field.hpp"
#include "exact/ratexpr.hpp"
#include "loopsym/partition.hpp"
#include "loopsym/var_array.hpp"

namespace lsym::rmatrix {

/// One site's colors: v[c-1] = v^(c).
template <class F>
using Site = std::vector<F>;
/// Sites 1..m, each with n colors.
template <class F>
using SiteArray = std::vector<Site<F>>;

template <class F>
const F& color_at(const Site<F>& v, long c) {
  return v[canonical_color(c, static_cast<long>(v.size())) - 1];
}

/// kappa_i(x, y) = sum_{j=i}^{i+n-1} prod_{k=i+1}^{j} y^(k) prod_{k=j+1}^{i+n-1} x^(k).
template <class F>
F kappa(long i, const Site<F>& x, const Site<F>& y) {
  using Tr = FieldTraits<F>;
  const long n = static_cast<long>(x.size());
  require(n >= 1 && y.size() == x.size(), "kappa needs two n-vectors");
  F sum = Tr::zero();
  for (long j = i; j <= i + n - 1; ++j) {
    F term = Tr::one();
    for (long k = i + 1; k <= j; ++k) term = term * color_at(y, k);
    for (long k = j + 1; k <= i + n - 1; ++k) term = term * color_at(x, k);
    sum = sum + term;
  }
  return sum;
}

template <class F>
struct SwapResult {
  Site<F> x_out;
  Site<F> y_out;
};

/// s(x^(i)) = y^(i+1) kappa_{i+1} / kappa_i, s(y^(i)) = x^(i-1) kappa_{i-1} / kappa_i.
template <class F>
SwapResult<F> swap(const Site<F>& x, const Site<F>& y) {
  const long n = static_cast<long>(x.size());
  std::vector<F> k;
  k.reserve(n);
  for (long i = 1; i <= n; ++i) {
    k.push_back(kappa(i, x, y));
    if (FieldTraits<F>::is_zero(k.back()))
      fail(ErrorCode::KappaVanishes, "kappa_" + std::to_string(i) + " vanishes");
  }
  auto kap = [&](long i) -> const F& { return color_at(k, i); };
  SwapResult<F> out;
  for (long i = 1; i <= n; ++i) {
    out.x_out.push_back(color_at(y, i + 1) * kap(i + 1) / kap(i));
    out.y_out.push_back(color_at(x, i - 1) * kap(i - 1) / kap(i));
  }
  return out;
}

/// Applies s_k (swap of sites k, k+1) for each k of the word, left to right.
template <class F>
SiteArray<F> apply_word(SiteArray<F> state, const std::vector<int>& word) {
  for (int k : word) {
    require(k >= 1 && k + 1 <= static_cast<int>(state.size()),
            "swap index out of range: " + std::to_string(k));
    auto r = rmatrix::swap(state[k - 1], state[k]);
    state[k - 1] = std::move(r.x_out);
    state[k] = std::move(r.y_out);
  }
  return state;
}

/// s_{b-1} ... s_{a+1} s_a s_{a+1} ... s_{b-1}; empty when a == b.
std::vector<int> transposition_word(int a, int b);

/// Symbolic variables of vars as rational expressions.
SiteArray<RationalExpr> symbolic_sites(const loop::LoopVarArray& vars);
/// Numeric values of vars (the array must be numeric).
SiteArray<Rational> numeric_sites(const loop::LoopVarArray& vars);

SiteArray<RationalExpr> apply_word(const loop::LoopVarArray& vars, const std::vector<int>& word);

/// Bindings realizing s_j on the symbolic variables of vars (for substitute).
Bindings swap_bindings(const loop::LoopVarArray& vars, int j);

/// Column j applies t_{m-j+1,m}; row i takes x_m^(r) x_m^(r-1) ... x_m^(r-alpha_i+1)
/// from the transformed last site.
template <class F>
std::vector<std::vector<F>> loop_alternant_matrix(const SiteArray<F>& base,
                                                  const std::vector<int>& alpha, long r) {
  const int m = static_cast<int>(base.size());
  require(static_cast<int>(alpha.size()) == m, "alpha must have length m");
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
    require(alpha[i] > alpha[i + 1], "alpha must be strictly decreasing");
  require(m == 0 || alpha.back() >= 0, "alpha must be nonnegative");
  std::vector<std::vector<F>> mat(m, std::vector<F>(m));
  for (int j = 1; j <= m; ++j) {
    const auto moved = apply_word(base, transposition_word(m - j + 1, m));
    const Site<F>& last = moved[m - 1];
    for (int i = 1; i <= m; ++i) {
      F prod = FieldTraits<F>::one();
      for (int c = 0; c < alpha[i - 1]; ++c) prod = prod * color_at(last, r - c);
      mat[i - 1][j - 1] = prod;
    }
  }
  return mat;
}

template <class F>
F loop_alternant(const SiteArray<F>& base, const std::vector<int>& alpha, long r) {
  return determinant(loop_alternant_matrix(base, alpha, r));
}

/// lambda + delta with delta = (m-1, ..., 0), lambda padded to length m.
std::vector<int> shifted_exponents(const loop::Partition& lambda, int m);

/// Color c such that a^(r)_{lambda+delta} / a^(r)_delta = s^(c)_lambda in m sites:
/// c = r - m + 1 (mod n), which is r - 1 when m = 2.
long alternant_schur_color(long r, int m, int n);

/// a^(r)_{lambda+delta} / a^(r)_delta; see alternant_schur_color.
template <class F>
F schur_via_alternants(const SiteArray<F>& base, const loop::Partition& lambda, long r) {
  const int m = static_cast<int>(base.size());
  require(lambda.length() <= m, "lambda must have at most m parts");
  const F den = loop_alternant(base, shifted_exponents(loop::Partition(), m), r);
  if (FieldTraits<F>::is_zero(den))
    fail(ErrorCode::DegenerateDenominator, "a_delta vanishes");
  return loop_alternant(base, shifted_exponents(lambda, m), r) / den;
}

RationalExpr schur_via_alternants(const loop::LoopVarArray& vars, const loop::Partition& lambda,
                                  long r);

struct CommutationReport {
  bool holds = false;
  bool symbolic = false;
  int points = 0;
};

/// Compares M(x_1)...M(x_m) with the product over the image of the word.
/// Symbolic for n <= 2, m <= 3; otherwise exact evaluation at random points.
CommutationReport verify_whirl_commutation(int n, int m, const std::vector<int>& word,
                                           unsigned long seed = 1, int points = 20);

}  // namespace lsym::rmatrix
