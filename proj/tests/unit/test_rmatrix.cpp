#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/schur.hpp"
#include "rmatrix/rmatrix.hpp"
#include "support/support.hpp"

using namespace lsym;
using namespace lsym::rmatrix;
using lsym::loop::LoopVarArray;
using lsym::loop::Partition;
using lsym::testing::X;
using lsym::testing::XR;

namespace {

Site<SparsePoly> xs(int n, int site) {
  Site<SparsePoly> v;
  for (int c = 1; c <= n; ++c) v.push_back(X(site, c, n));
  return v;
}

Site<RationalExpr> xr(int n, int site) {
  Site<RationalExpr> v;
  for (int c = 1; c <= n; ++c) v.push_back(XR(site, c, n));
  return v;
}

bool arrays_eq(const SiteArray<RationalExpr>& a, const SiteArray<RationalExpr>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a[i].size(); ++c)
      if (!rational_eq(a[i][c], b[i][c])) return false;
  return true;
}

SiteArray<Rational> random_sites(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<long> d(1, 1000000);
  SiteArray<Rational> s(m, Site<Rational>(n));
  for (auto& site : s)
    for (auto& v : site) v = Rational(d(rng));
  return s;
}

}  // namespace

TEST_CASE("kappa") {
  auto x = xs(3, 1), y = xs(3, 2);
  CHECK(kappa(1, x, y) == x[1] * x[2] + y[1] * x[2] + y[1] * y[2]);
  CHECK(kappa(1, xs(1, 1), xs(1, 2)) == SparsePoly(1));
  CHECK(kappa(1, xs(2, 1), xs(2, 2)) == X(1, 2, 2) + X(2, 2, 2));
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      auto k = kappa(i, xs(n, 1), xs(n, 2));
      CHECK(k.size() == static_cast<std::size_t>(n));
      CHECK(k.is_homogeneous());
      CHECK(k.degree() == n - 1);
      CHECK(k.all_coefficients_positive());
    }
}

TEST_CASE("swap formulas") {
  auto x = xr(2, 1), y = xr(2, 2);
  auto s = rmatrix::swap(x, y);
  CHECK(rational_eq(s.x_out[0], y[1] * (x[0] + y[0]) / (x[1] + y[1])));
  CHECK(rational_eq(s.x_out[1], y[0] * (x[1] + y[1]) / (x[0] + y[0])));
  CHECK(rational_eq(s.y_out[0], x[1] * (x[0] + y[0]) / (x[1] + y[1])));
  CHECK(rational_eq(s.y_out[1], x[0] * (x[1] + y[1]) / (x[0] + y[0])));
  auto one = rmatrix::swap(xr(1, 1), xr(1, 2));
  CHECK(rational_eq(one.x_out[0], XR(2, 1, 1)));
  CHECK(rational_eq(one.y_out[0], XR(1, 1, 1)));
  auto t = rmatrix::swap(xr(3, 1), xr(3, 2));
  CHECK(rational_eq(t.x_out[0] + t.y_out[0], XR(1, 1, 3) + XR(2, 1, 3)));
}

TEST_CASE("swap is an involution and preserves color products") {
  for (int n = 1; n <= 3; ++n) {
    auto x = xr(n, 1), y = xr(n, 2);
    auto s = rmatrix::swap(x, y);
    for (const auto& e : s.x_out) CHECK(e.subtraction_free());
    for (const auto& e : s.y_out) CHECK(e.subtraction_free());
    auto ss = rmatrix::swap(s.x_out, s.y_out);
    for (int c = 0; c < n; ++c) {
      CHECK(rational_eq(ss.x_out[c], x[c]));
      CHECK(rational_eq(ss.y_out[c], y[c]));
    }
    RationalExpr px(1), py(1);
    for (int c = 0; c < n; ++c) {
      px = px * s.x_out[c];
      py = py * y[c];
    }
    CHECK(rational_eq(px, py));
  }
}

TEST_CASE("swap reports vanishing kappa") {
  Site<Rational> x{1, -1}, y{1, 1};  // kappa_1 = x2 + y2 = 0
  try {
    rmatrix::swap(x, y);
    FAIL("expected KappaVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KappaVanishes);
  }
}

TEST_CASE("words act as the symmetric group") {
  CHECK(transposition_word(1, 3) == std::vector<int>{2, 1, 2});
  CHECK(transposition_word(2, 2).empty());
  CHECK(transposition_word(1, 4) == std::vector<int>{3, 2, 1, 2, 3});
  for (int n = 1; n <= 2; ++n) {
    auto vars = LoopVarArray::symbolic(n, 3);
    auto base = symbolic_sites(vars);
    CHECK(arrays_eq(apply_word(vars, {}), base));
    CHECK(arrays_eq(apply_word(vars, {1, 1}), base));
    CHECK(arrays_eq(apply_word(vars, {2, 2}), base));
    CHECK(arrays_eq(apply_word(vars, {1, 2, 1}), apply_word(vars, {2, 1, 2})));
  }
  CHECK_THROWS_AS(apply_word(LoopVarArray::symbolic(2, 2), {2}), Error);
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto base = random_sites(rng, n, 4);
      CHECK(apply_word(base, {1, 2, 1}) == apply_word(base, {2, 1, 2}));
      CHECK(apply_word(base, {2, 3, 2}) == apply_word(base, {3, 2, 3}));
      CHECK(apply_word(base, {1, 3}) == apply_word(base, {3, 1}));
      CHECK(apply_word(base, {2, 2}) == base);
    }
}

TEST_CASE("whirl products commute with the action") {
  auto r1 = verify_whirl_commutation(1, 3, {1, 2});
  CHECK(r1.holds);
  CHECK(r1.symbolic);
  auto r2 = verify_whirl_commutation(2, 2, {1});
  CHECK(r2.holds);
  CHECK(r2.symbolic);
  CHECK(verify_whirl_commutation(2, 3, {1, 2, 1}).holds);
  auto r3 = verify_whirl_commutation(3, 3, {1, 2});
  CHECK(r3.holds);
  CHECK_FALSE(r3.symbolic);
  CHECK(r3.points == 20);
  CHECK(verify_whirl_commutation(4, 4, {3, 1, 2}, 5).holds);
}

TEST_CASE("loop symmetric functions are invariant") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      for (int j = 1; j < m; ++j) {
        auto b = swap_bindings(vars, j);
        for (int k = 1; k <= m; ++k)
          for (int r = 1; r <= n; ++r) {
            auto e = loop::loop_e(vars, k, r);
            CHECK(rational_eq(substitute(e, b), RationalExpr(e)));
          }
        for (int k = 1; k <= 2; ++k) {
          auto p = loop::loop_powersum(vars, k);
          CHECK(rational_eq(substitute(p, b), RationalExpr(p)));
        }
      }
    }
}

TEST_CASE("loop alternant entries") {
  auto vars = LoopVarArray::symbolic(3, 2);
  auto base = symbolic_sites(vars);
  auto x = [](int c) { return XR(1, c, 3); };
  auto y = [](int c) { return XR(2, c, 3); };
  auto a = loop_alternant_matrix(base, {3, 1}, 1);
  CHECK(rational_eq(a[0][0], y(1) * y(3) * y(2)));
  CHECK(rational_eq(a[1][0], y(1)));
  auto d = loop_alternant_matrix(base, {1, 0}, 1);
  auto k1 = kappa(1, base[0], base[1]), k3 = kappa(3, base[0], base[1]);
  CHECK(rational_eq(d[0][1], x(3) * k3 / k1));
  CHECK(rational_eq(d[1][0], RationalExpr(1)));
  CHECK_THROWS_AS(loop_alternant_matrix(base, {1, 1}, 1), Error);
  // n = 1: the Vandermonde determinant.
  auto v1 = LoopVarArray::symbolic(1, 3);
  auto van = loop_alternant(symbolic_sites(v1), {2, 1, 0}, 1);
  auto z = [](int i) { return XR(i, 1, 1); };
  // Column j holds the variables of site m-j+1.
  CHECK(rational_eq(van, -((z(1) - z(2)) * (z(1) - z(3)) * (z(2) - z(3)))));
}

TEST_CASE("schur functions as ratios of alternants") {
  auto vars = LoopVarArray::symbolic(3, 2);
  auto s = schur_via_alternants(vars, Partition({2, 1}), 1);
  auto x = [](int c) { return X(1, c, 3); };
  auto y = [](int c) { return X(2, c, 3); };
  CHECK(rational_eq(s, RationalExpr(x(3) * y(1) * x(2) + x(3) * y(1) * y(2))));
  CHECK(s.is_polynomial());
  CHECK(rational_eq(s, RationalExpr(loop::loop_schur_tableaux(
                           loop::SkewShape(Partition({2, 1})), 0, vars))));
  CHECK(rational_eq(schur_via_alternants(vars, Partition(), 2), RationalExpr(1)));
  auto v1 = LoopVarArray::symbolic(1, 3);
  CHECK(rational_eq(schur_via_alternants(v1, Partition({2, 1}), 1),
                    RationalExpr(loop::loop_schur_tableaux(loop::SkewShape(Partition({2, 1})),
                                                           0, v1))));
  // The ratio is s^(r-m+1): r - 1 at m = 2, but not at m = 3 for n = 2.
  {
    auto v = LoopVarArray::symbolic(2, 3);
    Partition lam({1});
    auto alt = schur_via_alternants(v, lam, 2);
    CHECK_FALSE(rational_eq(alt, RationalExpr(loop::loop_schur_tableaux(loop::SkewShape(lam), 1, v))));
    CHECK(rational_eq(alt, RationalExpr(loop::loop_schur_tableaux(loop::SkewShape(lam), 0, v))));
  }
  CHECK(alternant_schur_color(1, 2, 3) == 3);
  CHECK(alternant_schur_color(1, 3, 2) == 1);
  // Symbolic for n <= 2, m <= 3; exact random points otherwise.
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto v = LoopVarArray::symbolic(n, m);
      for (auto parts : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {2, 2}})
        for (int r = 1; r <= n; ++r) {
          Partition lam(parts);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(lam.to_string());
          auto tab = loop::loop_schur_tableaux(loop::SkewShape(lam),
                                               alternant_schur_color(r, m, n), v);
          if (n <= 2 && m <= 3) {
            CHECK(rational_eq(schur_via_alternants(v, lam, r), RationalExpr(tab)));
            continue;
          }
          for (int p = 0; p < 20; ++p) {
            auto sites = random_sites(rng, n, m);
            Point pt;
            for (int i = 1; i <= m; ++i)
              for (int c = 1; c <= n; ++c) pt[v.var(i, c)] = sites[i - 1][c - 1];
            CHECK(schur_via_alternants(sites, lam, r) == eval_at(tab, pt));
          }
        }
    }
}
