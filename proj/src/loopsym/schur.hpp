#pragma once

#include <vector>

#include "exact/det.hpp"
#include "loopsym/partition.hpp"
#include "loopsym/tableau.hpp"
#include "loopsym/var_array.hpp"

namespace lsym::loop {

/// Monomial prod_s x_{T(s)}^(c(s)+r) for a tableau T.
SparsePoly tableau_weight(const Tableau& t, long r, const LoopVarArray& vars);

/// s^(r)_{shape} as a sum of r-weights of SSYT with entries <= vars.m().
SparsePoly loop_schur_tableaux(const SkewShape& shape, long r, const LoopVarArray& vars);

/// Jacobi-Trudi matrix for s^(r)_{rho/nu}: with lambda = rho', mu = nu'
/// and l = rho_1, entry (i,j) = e_{lambda_i - mu_j - i + j}^(r - j + 1 + mu_j).
/// e_of(k, color) must return 0 for k < 0 and 1 for k = 0.
template <class T, class EOf>
std::vector<std::vector<T>> jacobi_trudi_matrix(const SkewShape& shape, long r, EOf&& e_of) {
  const Partition lam = shape.outer().conjugate();
  const Partition mu = shape.inner().conjugate();
  const int l = shape.outer().part(1);
  std::vector<std::vector<T>> mat(l, std::vector<T>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      mat[i - 1][j - 1] =
          e_of(lam.part(i) - mu.part(j) - i + j, r - j + 1 + mu.part(j));
  return mat;
}

template <class T, class EOf>
T jacobi_trudi(const SkewShape& shape, long r, EOf&& e_of) {
  return determinant(jacobi_trudi_matrix<T>(shape, r, e_of));
}

SparsePoly loop_schur_jt(const SkewShape& shape, long r, const LoopVarArray& vars);

struct RibbonTerm {
  Partition mu;
  int sign = 1;
};

/// Rows occupied by the skew shape minus one.
int ribbon_height(const SkewShape& s);
/// Connected skew shape with no 2x2 square.
bool is_ribbon(const SkewShape& s);

/// Ribbons mu / lambda of size k n, each with sign (-1)^height, so that
/// p~_k s_lambda^(r) = sum sign s_mu^(r). Terms with more than m rows vanish
/// in m variables and are dropped when m > 0.
std::vector<RibbonTerm> mn_expand(int n, int k, const Partition& lambda, int m);

}  // namespace lsym::loop
