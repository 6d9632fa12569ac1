#pragma once

#include <string>
#include <vector>

#include "exact/rational.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/matrix_poly.hpp"
#include "loopsym/partition.hpp"

namespace lsym::factorize {

template <class S>
using Dense = std::vector<std::vector<S>>;

/// (n w) x (n w) window of the block-Toeplitz matrix: block (I, J) is the
/// coefficient of t^(J - I + offset).
template <class S>
Dense<S> toeplitz_window(const loop::MatrixPoly<S>& p, int w, int offset = 0) {
  require(w >= 1, "window must have at least one block");
  const int n = p.n();
  Dense<S> x(n * w, std::vector<S>(n * w, FieldTraits<S>::zero()));
  for (int bi = 0; bi < w; ++bi)
    for (int bj = 0; bj < w; ++bj) {
      const int d = bj - bi + offset;
      if (d < 0) continue;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x[bi * n + r][bj * n + c] = p.coeff(r, c, d);
    }
  return x;
}

struct Violation {
  std::vector<int> rows;  // 0-based
  std::vector<int> cols;
  double value = 0;
};

struct TnnReport {
  int window = 0;
  int max_order = 0;
  long minors_checked = 0;
  std::vector<Violation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Every minor of order <= max_order in the w-block window. Doubles count as
/// negative below -tol * (1 + largest entry)^order.
TnnReport tnn_check(const loop::MatrixPoly<double>& p, int w, int max_order, double tol = 1e-9);
TnnReport tnn_check(const loop::MatrixPoly<Rational>& p, int w, int max_order);

/// e-values keyed by (k, color); k = 0 is 1 and missing entries are 0.
using ETableReal = loop::ETable<double>;

struct SchurValue {
  loop::SkewShape shape;
  long r = 0;
  double value = 0;
};

struct CertificateReport {
  int evaluated = 0;
  std::vector<SchurValue> negatives;
  bool passed() const noexcept { return negatives.empty(); }
};

/// s^(r)_{shape} for every shape and r in 1..n via Jacobi-Trudi on the table.
CertificateReport skew_schur_certificate(const ETableReal& e, int n,
                                         const std::vector<loop::SkewShape>& shapes,
                                         double tol = 1e-9);

/// e-table of a numeric matrix polynomial up to k = max_k.
ETableReal e_table_of(const loop::MatrixPoly<double>& p, int max_k);

struct FactorizationResult {
  std::vector<std::vector<double>> params;  // params[i][c-1] = x_{i+1}^(c)
  double residual = 0;
  bool converged = false;
  int iterations = 0;
};

/// P(t) = M(x_1) ... M(x_m). Peels the rightmost whirl at a real root t0 of
/// det P, reading its parameters off the kernel of P(t0), then polishes all
/// parameters by Levenberg-Marquardt.
/// Errors: NotUniUpperTriangular, NoRealFactorization, NoConvergence.
FactorizationResult whirl_factorize(const loop::MatrixPoly<double>& p, int m,
                                    double tol = 1e-8, int max_iter = 200);

/// Largest absolute coefficient difference.
double max_abs_diff(const loop::MatrixPoly<double>& a, const loop::MatrixPoly<double>& b);

/// True if some element of the S_m orbit of a equals b within tol.
bool orbit_match(const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b, double tol = 1e-7);

}  // namespace lsym::factorize
