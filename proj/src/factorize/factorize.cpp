#include "factorize/factorize.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "loopsym/schur.hpp"
#include "rmatrix/rmatrix.hpp"

namespace lsym::factorize {

namespace {

using loop::MatrixPoly;
using Params = std::vector<std::vector<double>>;

// Calls fn(subset) for every increasing k-subset of 0..n-1.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational exact_det(std::vector<std::vector<Rational>> a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

double to_double(double v) { return v; }
double to_double(const Rational& v) { return v.get_d(); }

template <class S, class DetFn, class NegFn>
TnnReport scan_minors(const Dense<S>& x, int w, int max_order, DetFn&& det, NegFn&& negative) {
  require(w >= 1 && w <= 6, "tnn_check window must be in 1..6 blocks");
  require(max_order >= 1 && max_order <= 4, "tnn_check order must be in 1..4");
  const int size = static_cast<int>(x.size());
  TnnReport rep;
  rep.window = w;
  rep.max_order = max_order;
  for (int k = 1; k <= std::min(max_order, size); ++k)
    for_each_subset(size, k, [&](const std::vector<int>& rows) {
      for_each_subset(size, k, [&](const std::vector<int>& cols) {
        std::vector<std::vector<S>> sub(k, std::vector<S>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = x[rows[i]][cols[j]];
        const S v = det(sub);
        ++rep.minors_checked;
        if (negative(v, k)) rep.violations.push_back({rows, cols, to_double(v)});
      });
    });
  return rep;
}

double max_abs(const MatrixPoly<double>& p) {
  double m = 0;
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      for (double c : p.at(i, j)) m = std::max(m, std::abs(c));
  return m;
}

Eigen::MatrixXcd eval_at(const MatrixPoly<double>& p, std::complex<double> t) {
  const int n = p.n();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      const auto& poly = p.at(i, j);
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
      m(i, j) = acc;
    }
  return m;
}

// Coefficients of det P(t) by sampling on the unit circle.
std::vector<double> det_coeffs(const MatrixPoly<double>& p) {
  const int deg = std::max(0, p.degree()) * p.n();
  const int samples = deg + 1;
  const double pi = std::acos(-1.0);
  std::vector<std::complex<double>> vals(samples);
  for (int k = 0; k < samples; ++k)
    vals[k] = eval_at(p, std::polar(1.0, 2 * pi * k / samples)).determinant();
  std::vector<double> c(samples);
  double scale = 0;
  for (int j = 0; j < samples; ++j) {
    std::complex<double> acc = 0;
    for (int k = 0; k < samples; ++k) acc += vals[k] * std::polar(1.0, -2 * pi * j * k / samples);
    c[j] = acc.real() / samples;
    scale = std::max(scale, std::abs(c[j]));
  }
  while (c.size() > 1 && std::abs(c.back()) <= 1e-10 * scale) c.pop_back();
  return c;
}

// Exact division of every entry by 1 + c t; nullopt if some remainder is
// too large.
std::optional<MatrixPoly<double>> divide_linear(const MatrixPoly<double>& p, double c,
                                                 double tol) {
  MatrixPoly<double> q(p.n());
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j) {
      const auto& a = p.at(i, j);
      if (a.empty()) continue;
      std::vector<double> out(a.size() > 1 ? a.size() - 1 : 0);
      double carry = 0;
      for (std::size_t d = 0; d + 1 < a.size(); ++d) {
        out[d] = a[d] - c * carry;
        carry = out[d];
      }
      const double rem = a.back() - c * carry;
      if (std::abs(rem) > tol) return std::nullopt;
      if (a.size() == 1) {
        // Constant entry: divisible only if it vanishes.
        continue;
      }
      for (std::size_t d = 0; d < out.size(); ++d)
        if (std::abs(out[d]) > 0) q.set_coeff(i, j, static_cast<int>(d), out[d]);
    }
  return q;
}

// adj M(a) = sum_{k<n} (-N)^k with N = M(a) - I, since N^n = (prod a) t I.
MatrixPoly<double> whirl_adjugate(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size());
  MatrixPoly<double> neg_n = loop::whirl(a);
  for (int i = 0; i < n; ++i) neg_n.set_coeff(i, i, 0, 0.0);
  neg_n = neg_n.map<double>([](double v) { return -v; });
  MatrixPoly<double> term = MatrixPoly<double>::identity(n);
  MatrixPoly<double> sum = term;
  for (int k = 1; k < n; ++k) {
    term = term * neg_n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int d = 0; d <= term.degree(); ++d) {
          const double v = sum.coeff(i, j, d) + term.coeff(i, j, d);
          sum.set_coeff(i, j, d, v);
        }
  }
  return sum;
}

// Rightmost whirl vanishing at the real root t0, read off the kernel of P(t0).
std::optional<std::vector<double>> kernel_whirl(const MatrixPoly<double>& p, double t0) {
  const int n = p.n();
  const Eigen::MatrixXd m = eval_at(p, t0).real();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd v = svd.matrixV().col(n - 1);
  std::vector<double> a(n);
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(v(i + 1)) < 1e-300) return std::nullopt;
    a[i] = -v(i) / v(i + 1);
  }
  if (std::abs(v(0)) < 1e-300) return std::nullopt;
  a[n - 1] = -v(n - 1) / (t0 * v(0));
  for (double x : a)
    if (!std::isfinite(x)) return std::nullopt;
  return a;
}

// Peels whirls off the right, trying each real root of det in turn. Returns
// the factors in left-to-right order.
bool peel(const MatrixPoly<double>& p, int left, const std::vector<double>& roots,
          double tol, Params& out) {
  if (left == 0) return true;
  std::vector<double> tried;
  for (double t0 : roots) {
    bool seen = false;
    for (double s : tried) seen = seen || std::abs(s - t0) <= 1e-9 * (1 + std::abs(t0));
    if (seen) continue;
    tried.push_back(t0);
    const auto a = kernel_whirl(p, t0);
    if (!a) continue;
    double prod = 1;
    for (double x : *a) prod *= x;
    const double c = (p.n() % 2 == 1 ? 1.0 : -1.0) * prod;
    const auto q = divide_linear(p * whirl_adjugate(*a), c, tol * (1 + max_abs(p)));
    if (!q) continue;
    std::vector<double> rest;
    bool dropped = false;
    for (double r : roots) {
      if (!dropped && std::abs(r - t0) <= 1e-9 * (1 + std::abs(t0))) {
        dropped = true;
        continue;
      }
      rest.push_back(r);
    }
    if (peel(*q, left - 1, rest, tol, out)) {
      out.push_back(*a);
      return true;
    }
  }
  return false;
}

struct ResidualFunctor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const MatrixPoly<double>* target;
  int n, m, deg;

  int inputs() const { return n * m; }
  int values() const { return std::max(n * n * (deg + 1), n * m); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    Params ps(m, std::vector<double>(n));
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < n; ++c) ps[i][c] = x(i * n + c);
    const auto prod = loop::whirl_product(n, ps);
    f.setZero(values());
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int d = 0; d <= deg; ++d) f(k++) = prod.coeff(i, j, d) - target->coeff(i, j, d);
    return 0;
  }
};

Params unpack(const Eigen::VectorXd& x, int n, int m) {
  Params ps(m, std::vector<double>(n));
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c) ps[i][c] = x(i * n + c);
  return ps;
}

}  // namespace

TnnReport tnn_check(const MatrixPoly<double>& p, int w, int max_order, double tol) {
  const auto x = toeplitz_window(p, w);
  double big = 0;
  for (const auto& row : x)
    for (double v : row) big = std::max(big, std::abs(v));
  return scan_minors(
      x, w, max_order,
      [](const std::vector<std::vector<double>>& s) {
        const int k = static_cast<int>(s.size());
        Eigen::MatrixXd m(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) m(i, j) = s[i][j];
        return m.determinant();
      },
      [&](double v, int k) { return v < -tol * std::pow(1 + big, k); });
}

TnnReport tnn_check(const MatrixPoly<Rational>& p, int w, int max_order) {
  return scan_minors(toeplitz_window(p, w), w, max_order, exact_det,
                     [](const Rational& v, int) { return sgn(v) < 0; });
}

CertificateReport skew_schur_certificate(const ETableReal& e, int n,
                                         const std::vector<loop::SkewShape>& shapes,
                                         double tol) {
  require(n >= 1, "n must be positive");
  auto e_of = [&](int k, long color) -> double {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    auto it = e.find({k, static_cast<int>(canonical_color(color, n))});
    return it == e.end() ? 0.0 : it->second;
  };
  CertificateReport rep;
  for (const auto& shape : shapes)
    for (long r = 1; r <= n; ++r) {
      const double v = loop::jacobi_trudi<double>(shape, r, e_of);
      ++rep.evaluated;
      if (v < -tol) rep.negatives.push_back({shape, r, v});
    }
  return rep;
}

ETableReal e_table_of(const MatrixPoly<double>& p, int max_k) {
  return loop::extract_e(
      p, max_k, [](double v) { return std::abs(v) <= 1e-12; },
      [](double v) { return std::abs(v - 1) <= 1e-12; });
}

double max_abs_diff(const MatrixPoly<double>& a, const MatrixPoly<double>& b) {
  require(a.n() == b.n(), "matrix size mismatch");
  double m = 0;
  const int deg = std::max(a.degree(), b.degree());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      for (int d = 0; d <= deg; ++d) m = std::max(m, std::abs(a.coeff(i, j, d) - b.coeff(i, j, d)));
  return m;
}

FactorizationResult whirl_factorize(const MatrixPoly<double>& p, int m, double tol,
                                    int max_iter) {
  require(m >= 1, "m must be positive");
  const int n = p.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(p.coeff(i, j, 0) - want) > 1e-9)
        fail(ErrorCode::NotUniUpperTriangular, "P(0) is not uni-upper-triangular");
    }

  const auto dc = det_coeffs(p);
  const int ddeg = static_cast<int>(dc.size()) - 1;
  if (ddeg > m)
    fail(ErrorCode::InvalidArgument, "det P has degree " + std::to_string(ddeg) +
                                         ", more than m = " + std::to_string(m));
  std::vector<double> roots;
  if (ddeg >= 1) {
    Eigen::VectorXd coeffs(dc.size());
    for (std::size_t i = 0; i < dc.size(); ++i) coeffs(i) = dc[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    for (int i = 0; i < solver.roots().size(); ++i) {
      const auto z = solver.roots()(i);
      if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z)))
        fail(ErrorCode::NoRealFactorization, "det P(t) has a non-real root");
      roots.push_back(z.real());
    }
  }

  const int deg = std::max(0, p.degree());
  ResidualFunctor fn{&p, n, m, deg};
  auto residual_of = [&](const Params& ps) { return max_abs_diff(loop::whirl_product(n, ps), p); };

  // Starting points: the peeled factorization (padded with whirls of
  // vanishing product when det has low degree), then pseudo-random ones.
  std::vector<Params> starts;
  Params peeled;
  const int peelable = std::min(ddeg, m);
  if (peel(p, peelable, roots, 1e-6, peeled)) {
    Params full(m - peelable, std::vector<double>(n, 0.0));
    full.insert(full.end(), peeled.begin(), peeled.end());
    starts.push_back(full);
  }
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  for (int s = 0; s < 8; ++s) {
    Params g(m, std::vector<double>(n));
    for (auto& site : g)
      for (auto& v : site) v = unit(rng);
    starts.push_back(g);
  }

  FactorizationResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    Eigen::VectorXd x(n * m);
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < n; ++c) x(i * n + c) = start[i][c];
    FactorizationResult cur;
    cur.params = start;
    cur.residual = residual_of(start);
    if (cur.residual > tol * 1e-3) {
      Eigen::NumericalDiff<ResidualFunctor> nd(fn);
      Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ResidualFunctor>> lm(nd);
      lm.parameters.maxfev = max_iter * (n * m + 1);
      lm.parameters.xtol = 1e-15;
      lm.parameters.ftol = 1e-15;
      lm.minimize(x);
      cur.iterations = static_cast<int>(lm.iter);
      const auto polished = unpack(x, n, m);
      const double r = residual_of(polished);
      if (r < cur.residual) {
        cur.params = polished;
        cur.residual = r;
      }
    }
    if (cur.residual < best.residual) best = cur;
    if (best.residual <= tol) break;
  }
  best.converged = best.residual <= tol;
  if (!best.converged)
    fail(ErrorCode::NoConvergence,
         "no whirl factorization found (best residual " + std::to_string(best.residual) + ")");
  return best;
}

bool orbit_match(const Params& a, const Params& b, double tol) {
  require(a.size() == b.size() && !a.empty(), "orbit_match needs arrays of equal length");
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  for (const auto& s : b) require(static_cast<int>(s.size()) == n, "site size mismatch");
  const auto pa = loop::whirl_product(n, a);
  const auto pb = loop::whirl_product(n, b);
  if (max_abs_diff(pa, pb) > tol * (1 + max_abs(pa))) return false;

  auto close = [&](const Params& x) {
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < n; ++c)
        if (std::abs(x[i][c] - b[i][c]) > tol * (1 + std::abs(b[i][c]))) return false;
    return true;
  };
  // States are labelled by the permutation reached, since the swaps act by S_m.
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, Params> seen{{id, a}};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& perm : frontier) {
      const Params& cur = seen.at(perm);
      if (close(cur)) return true;
      for (int k = 0; k + 1 < m; ++k) {
        auto np = perm;
        std::swap(np[k], np[k + 1]);
        if (seen.count(np)) continue;
        Params moved = cur;
        try {
          const auto r = rmatrix::swap(cur[k], cur[k + 1]);
          moved[k] = r.x_out;
          moved[k + 1] = r.y_out;
        } catch (const Error&) {
          continue;
        }
        seen.emplace(np, std::move(moved));
        next.push_back(np);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace lsym::factorize
