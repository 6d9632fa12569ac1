#include "rmatrix/rmatrix.hpp"

#include <random>

#include "loopsym/matrix_poly.hpp"

namespace lsym::rmatrix {

std::vector<int> transposition_word(int a, int b) {
  require(1 <= a && a <= b, "transposition needs 1 <= a <= b");
  std::vector<int> w;
  for (int k = b - 1; k > a; --k) w.push_back(k);
  if (a < b) w.push_back(a);
  for (int k = a + 1; k <= b - 1; ++k) w.push_back(k);
  return w;
}

SiteArray<RationalExpr> symbolic_sites(const loop::LoopVarArray& vars) {
  SiteArray<RationalExpr> s(vars.m());
  for (int i = 1; i <= vars.m(); ++i)
    for (int c = 1; c <= vars.n(); ++c) s[i - 1].push_back(RationalExpr(vars.entry(i, c)));
  return s;
}

SiteArray<Rational> numeric_sites(const loop::LoopVarArray& vars) {
  const auto& vals = vars.values();
  return SiteArray<Rational>(vals.begin(), vals.end());
}

SiteArray<RationalExpr> apply_word(const loop::LoopVarArray& vars, const std::vector<int>& word) {
  return apply_word(symbolic_sites(vars), word);
}

Bindings swap_bindings(const loop::LoopVarArray& vars, int j) {
  require(vars.is_symbolic(), "swap bindings need symbolic variables");
  require(j >= 1 && j < vars.m(), "swap index out of range");
  auto s = symbolic_sites(vars);
  auto r = rmatrix::swap(s[j - 1], s[j]);
  Bindings b;
  for (int c = 1; c <= vars.n(); ++c) {
    b[vars.var(j, c)] = r.x_out[c - 1];
    b[vars.var(j + 1, c)] = r.y_out[c - 1];
  }
  return b;
}

long alternant_schur_color(long r, int m, int n) { return canonical_color(r - m + 1, n); }

std::vector<int> shifted_exponents(const loop::Partition& lambda, int m) {
  std::vector<int> a(m);
  for (int i = 1; i <= m; ++i) a[i - 1] = lambda.part(i) + m - i;
  return a;
}

RationalExpr schur_via_alternants(const loop::LoopVarArray& vars, const loop::Partition& lambda,
                                  long r) {
  SiteArray<RationalExpr> base =
      vars.is_symbolic() ? symbolic_sites(vars) : [&] {
        SiteArray<RationalExpr> s;
        for (const auto& site : numeric_sites(vars))
          s.emplace_back(site.begin(), site.end());
        return s;
      }();
  return schur_via_alternants(base, lambda, r).reduced();
}

namespace {

template <class F>
loop::MatrixPoly<F> product_of(const SiteArray<F>& sites, int n) {
  return loop::whirl_product<F>(n, sites);
}

}  // namespace

CommutationReport verify_whirl_commutation(int n, int m, const std::vector<int>& word,
                                           unsigned long seed, int points) {
  CommutationReport rep;
  const auto vars = loop::LoopVarArray::symbolic(n, m);
  if (n <= 2 && m <= 3) {
    rep.symbolic = true;
    auto base = symbolic_sites(vars);
    auto lhs = product_of(base, n);
    auto rhs = product_of(apply_word(base, word), n);
    rep.holds = loop::matrices_equal(lhs, rhs, [](const RationalExpr& a, const RationalExpr& b) {
      return rational_eq(a, b);
    });
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000000);
  rep.holds = true;
  for (int p = 0; p < points; ++p) {
    SiteArray<Rational> base(m, Site<Rational>(n));
    for (auto& site : base)
      for (auto& v : site) v = Rational(dist(rng));
    auto lhs = product_of(base, n);
    auto rhs = product_of(apply_word(base, word), n);
    ++rep.points;
    if (!loop::matrices_equal(lhs, rhs,
                              [](const Rational& a, const Rational& b) { return a == b; })) {
      rep.holds = false;
      break;
    }
  }
  return rep;
}

}  // namespace lsym::rmatrix
