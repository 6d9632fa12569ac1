#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/schur.hpp"
#include "support/support.hpp"

using namespace lsym;
using namespace lsym::loop;
using lsym::testing::X;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Collapses every color of a polynomial and evaluates at site values v.
Rational collapsed_value(const SparsePoly& p, int n, const std::vector<Rational>& v) {
  return eval_at(p, testing::collapsed_point(v, n));
}

}  // namespace

TEST_CASE("partitions and shapes") {
  CHECK(P({3, 1, 0}).parts() == std::vector<int>{3, 1});
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(Partition::staircase(3) == P({3, 2, 1}));
  CHECK_THROWS_AS(P({1, 2}), Error);
  CHECK_THROWS_AS(SkewShape(P({2}), P({1, 1})), Error);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(SkewShape(P({2, 1}), P({1})).cells() == std::vector<Cell>{{1, 2}, {2, 1}});
}

TEST_CASE("ssyt enumeration") {
  CHECK(ssyt_enumerate(SkewShape(P({2, 1})), 3).size() == 8);
  CHECK(ssyt_enumerate(SkewShape(P({1})), 5).size() == 5);
  CHECK(ssyt_enumerate(SkewShape(), 4).size() == 1);
  auto all = ssyt_enumerate(SkewShape(P({2, 1})), 3);
  CHECK(all.front() == Tableau::from_rows({{1, 1}, {2}}));
  for (const auto& t : all) CHECK(t.is_semistandard());
  // Count equals the classical Schur value at all-ones.
  for (const auto& sh : SkewShape::all_within(3, 3)) {
    auto ones = std::vector<Rational>(4, Rational(1));
    CHECK(Rational(static_cast<long>(ssyt_enumerate(sh, 4).size())) ==
          testing::classical_skew_schur(sh.outer(), sh.inner(), ones));
  }
}

TEST_CASE("loop elementary symmetric functions") {
  auto v = LoopVarArray::symbolic(2, 3);
  CHECK(loop_e(v, 2, 1) ==
        X(1, 1, 2) * X(2, 2, 2) + X(2, 1, 2) * X(3, 2, 2) + X(1, 1, 2) * X(3, 2, 2));
  CHECK(loop_e(v, 0, 1) == SparsePoly(1));
  CHECK(loop_e(v, 4, 1).is_zero());
  CHECK(loop_e(v, -1, 2).is_zero());
  auto c = LoopVarArray::symbolic(1, 3);
  CHECK(loop_e(c, 2, 1) == X(1, 1, 1) * X(2, 1, 1) + X(1, 1, 1) * X(3, 1, 1) +
                               X(2, 1, 1) * X(3, 1, 1));
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      auto e = loop_e(LoopVarArray::symbolic(n, 3), k, 2);
      CHECK(e.is_homogeneous());
      CHECK(e.degree() == k);
    }
  auto num = LoopVarArray::numeric(2, std::vector<std::vector<Rational>>(3, {1, 1}));
  CHECK(loop_e(num, 1, 1) == SparsePoly(3));
}

TEST_CASE("whirl matrices") {
  auto m = whirl<SparsePoly>({X(1, 1, 2), X(1, 2, 2)});
  CHECK(m.coeff(0, 0, 0) == SparsePoly(1));
  CHECK(m.coeff(0, 1, 0) == X(1, 1, 2));
  CHECK(m.coeff(1, 0, 1) == X(1, 2, 2));
  CHECK(m.coeff(1, 0, 0).is_zero());
  auto one = whirl<SparsePoly>({X(1, 1, 1)});
  CHECK(one.at(0, 0) == UPoly<SparsePoly>{SparsePoly(1), X(1, 1, 1)});
  auto z = whirl<Rational>({0, 0, 0});
  CHECK(matrices_equal(z, MatrixPoly<Rational>::identity(3),
                       [](const Rational& a, const Rational& b) { return a == b; }));
  auto id = whirl_product(LoopVarArray::symbolic(3, 0));
  CHECK(id.degree() == 0);
  auto scalar = whirl_product(LoopVarArray::symbolic(1, 2));
  CHECK(scalar.at(0, 0) == UPoly<SparsePoly>{SparsePoly(1), X(1, 1, 1) + X(2, 1, 1),
                                             X(1, 1, 1) * X(2, 1, 1)});
}

TEST_CASE("whirl product n=2 m=3 matches the expected matrix") {
  auto p = whirl_product(LoopVarArray::symbolic(2, 3));
  auto x = [](int i, int j) { return X(i, j, 2); };
  CHECK(p.coeff(0, 0, 0) == SparsePoly(1));
  CHECK(p.coeff(0, 0, 1) == x(1, 1) * x(2, 2) + x(2, 1) * x(3, 2) + x(1, 1) * x(3, 2));
  CHECK(p.coeff(0, 1, 0) == x(1, 1) + x(2, 1) + x(3, 1));
  CHECK(p.coeff(0, 1, 1) == x(1, 1) * x(2, 2) * x(3, 1));
  CHECK(p.coeff(1, 0, 1) == x(1, 2) + x(2, 2) + x(3, 2));
  CHECK(p.coeff(1, 0, 2) == x(1, 2) * x(2, 1) * x(3, 2));
  CHECK(p.coeff(1, 1, 1) == x(1, 2) * x(2, 1) + x(1, 2) * x(3, 1) + x(2, 2) * x(3, 1));
  CHECK(p.degree() == 2);
  auto e = extract_e(p, 6);
  CHECK(e.at({3, 2}) == x(1, 2) * x(2, 1) * x(3, 2));
  CHECK(e.at({3, 1}) == x(1, 1) * x(2, 2) * x(3, 1));
  CHECK(e.at({5, 1}).is_zero());
}

TEST_CASE("extract_e agrees with the explicit formula") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      auto v = LoopVarArray::symbolic(n, m);
      auto table = extract_e(whirl_product(v), n * m + n);
      for (auto& [key, val] : table) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(key.first);
        CHECK(val == loop_e(v, key.first, key.second));
        if (key.first > n * m) CHECK(val.is_zero());
      }
    }
  auto id = extract_e(MatrixPoly<SparsePoly>::identity(3), 6);
  for (auto& [key, val] : id) CHECK(val.is_zero());
}

TEST_CASE("extract_e rejects malformed matrices") {
  auto bad = MatrixPoly<SparsePoly>::identity(2);
  bad.set_coeff(1, 0, 0, SparsePoly(1));
  CHECK_THROWS_AS(extract_e(bad, 2), Error);
  auto diag = MatrixPoly<SparsePoly>::identity(2);
  diag.set_coeff(0, 0, 0, SparsePoly(2));
  try {
    extract_e(diag, 2);
    FAIL("expected MalformedMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedMatrix);
  }
}

TEST_CASE("loop schur by tableaux") {
  auto v = LoopVarArray::symbolic(2, 3);
  auto s = loop_schur_tableaux(SkewShape(P({2, 1})), 1, v);
  auto x = [](int i, int j) { return X(i, j, 2); };
  SparsePoly expected = x(1, 1) * x(1, 2) * x(2, 2) + x(1, 1) * x(2, 2) * x(2, 2) +
                        x(1, 1) * x(2, 2) * x(3, 2) + x(1, 1) * x(3, 2) * x(2, 2) +
                        x(1, 1) * x(1, 2) * x(3, 2) + x(2, 1) * x(2, 2) * x(3, 2) +
                        x(1, 1) * x(3, 2) * x(3, 2) + x(2, 1) * x(3, 2) * x(3, 2);
  CHECK(s == expected);
  // Shape (6,5,3)/(2) with n = 3 and r = 0.
  Tableau t(SkewShape(P({6, 5, 3}), P({2})), {{1, 1, 1, 3}, {1, 2, 2, 3, 4}, {3, 3, 4}});
  auto y = [](int i, int j) { return X(i, j, 3); };
  CHECK(tableau_weight(t, 0, LoopVarArray::symbolic(3, 4)) ==
        y(1, 1).pow(2) * y(3, 1).pow(3) * y(1, 2) * y(2, 2) * y(3, 2) * y(1, 3) * y(2, 3) *
            y(4, 3).pow(2));
  // n = 1 weight of a straight tableau.
  Tableau c = Tableau::from_rows({{1, 1, 1, 2, 4, 4, 5}, {2, 2, 3, 5, 5, 6}, {3, 6}});
  auto xc = [](int i) { return X(i, 1, 1); };
  CHECK(tableau_weight(c, 1, LoopVarArray::symbolic(1, 6)) ==
        xc(1).pow(3) * xc(2).pow(3) * xc(3).pow(2) * xc(4).pow(2) * xc(5).pow(3) *
            xc(6).pow(2));
  auto classical = loop_schur_tableaux(SkewShape(P({2, 1})), 1, LoopVarArray::symbolic(1, 3));
  CHECK(classical.size() == 7);  // 8 tableaux, x1x2x3 appears twice
  CHECK(classical.coefficient(Monomial::from_factors(
            {{VarId::make(1, 1, 1), 1}, {VarId::make(2, 1, 1), 1}, {VarId::make(3, 1, 1), 1}})) ==
        2);
}

TEST_CASE("jacobi-trudi equals tableau sum") {
  auto v = LoopVarArray::symbolic(2, 3);
  auto jt = loop_schur_jt(SkewShape(P({2, 1})), 1, v);
  CHECK(jt == loop_e(v, 2, 1) * loop_e(v, 1, 2) - loop_e(v, 3, 2));
  CHECK(jt == loop_schur_tableaux(SkewShape(P({2, 1})), 1, v));
  CHECK(loop_schur_jt(SkewShape(P({1, 1, 1})), 2, v) == loop_e(v, 3, 2));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      for (const auto& sh : SkewShape::all_within(3, 3))
        for (int r = 1; r <= n; ++r) {
          CAPTURE(sh.to_string());
          CAPTURE(n);
          CAPTURE(m);
          CHECK(loop_schur_jt(sh, r, vars) == loop_schur_tableaux(sh, r, vars));
        }
    }
}

TEST_CASE("color collapse gives classical functions") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 3; ++n) {
    const int m = 4;
    auto vars = LoopVarArray::symbolic(n, m);
    auto vals = testing::random_values(rng, m);
    auto ce = testing::classical_e_all(vals);
    for (int k = 0; k <= m; ++k)
      CHECK(collapsed_value(loop_e(vars, k, 1 + k % n), n, vals) == ce[k]);
    for (int k = 1; k <= 3; ++k) {
      // p~_k collapses to p_{kn}.
      CHECK(collapsed_value(loop_powersum(vars, k), n, vals) == testing::classical_p(k * n, vals));
    }
    for (const auto& sh : SkewShape::all_within(3, 3))
      CHECK(collapsed_value(loop_schur_tableaux(sh, 1, vars), n, vals) ==
            testing::classical_skew_schur(sh.outer(), sh.inner(), vals));
  }
}

TEST_CASE("loop powersums and cycle measurements") {
  auto v = LoopVarArray::symbolic(2, 2);
  auto x = [](int i, int j) { return X(i, j, 2); };
  CHECK(loop_powersum(v, 1) == x(1, 1) * x(1, 2) + x(2, 1) * x(2, 2));
  CHECK(loop_powersum(v, 2) == (x(1, 1) * x(1, 2)).pow(2) + (x(2, 1) * x(2, 2)).pow(2));
  CHECK(cycle_measurement(v, 1) == loop_powersum(v, 1));
  CHECK(cycle_measurement(v, 2) == loop_powersum(v, 2));
  auto c = LoopVarArray::symbolic(1, 3);
  CHECK(loop_powersum(c, 2) == X(1, 1, 1).pow(2) + X(2, 1, 1).pow(2) + X(3, 1, 1).pow(2));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k) {
        auto vars = LoopVarArray::symbolic(n, m);
        auto p = loop_powersum(vars, k);
        CHECK(cycle_measurement(vars, k) == p);
        CHECK(p.degree() == k * n);
        CHECK(p.is_homogeneous());
      }
}

TEST_CASE("boundary measurements") {
  auto v = LoopVarArray::symbolic(2, 2);
  auto x = [](int i, int j) { return X(i, j, 2); };
  CHECK(boundary_measurement(v, 1, 1, 1) == x(1, 1) * x(2, 2));
  CHECK(boundary_measurement(v, 1, 2, 1) == x(1, 1) + x(2, 1));
  CHECK(boundary_measurement(v, 2, 2, 0) == SparsePoly(1));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      for (int from = 1; from <= n; ++from)
        for (int k = 0; k <= n * m + 1; ++k) {
          const int to = static_cast<int>(canonical_color(from + k, n));
          const int wraps = (k + n - 1) / n;
          CHECK(boundary_measurement(vars, from, to, wraps) == loop_e(vars, k, from));
        }
    }
}

TEST_CASE("ribbons and the Murnaghan-Nakayama rule") {
  auto r1 = mn_expand(1, 1, Partition(), 0);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].mu == P({1}));
  CHECK(r1[0].sign == 1);
  auto r2 = mn_expand(2, 1, Partition(), 0);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].mu == P({2}));
  CHECK(r2[0].sign == 1);
  CHECK(r2[1].mu == P({1, 1}));
  CHECK(r2[1].sign == -1);
  CHECK(is_ribbon(SkewShape(P({3, 2}), P({1}))));
  CHECK_FALSE(is_ribbon(SkewShape(P({2, 2}))));
  CHECK_FALSE(is_ribbon(SkewShape(P({2, 1}), P({1}))));  // disconnected
  CHECK(ribbon_height(SkewShape(P({3, 2, 2}), P({2, 1}))) == 2);
  // p~_k s_lambda = sum of signed s_mu, symbolically.
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k * n <= 6; ++k)
      for (int m = 1; m <= 3; ++m) {
        auto vars = LoopVarArray::symbolic(n, m);
        for (const auto& lam : std::vector<Partition>{P({}), P({1}), P({2}), P({1, 1}),
                                                       P({2, 1}), P({2, 2})})
          for (int r = 1; r <= n; ++r) {
            SparsePoly rhs;
            for (const auto& term : mn_expand(n, k, lam, m))
              rhs += loop_schur_tableaux(SkewShape(term.mu), r, vars) * term.sign;
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(lam.to_string());
            CHECK(loop_powersum(vars, k) * loop_schur_tableaux(SkewShape(lam), r, vars) == rhs);
          }
      }
}

TEST_CASE("loop e's are algebraically independent") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      std::vector<SparsePoly> gens;
      for (int k = 1; k <= m; ++k)
        for (int r = 1; r <= n; ++r) gens.push_back(loop_e(vars, k, r));
      std::vector<VarId> xs;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) xs.push_back(vars.var(i, j));
      Point pt = testing::random_point(rng, n, m, 1000);
      std::vector<std::vector<Rational>> jac;
      for (const auto& g : gens) {
        std::vector<Rational> row;
        for (auto v : xs) row.push_back(eval_at(partial_derivative(g, v), pt));
        jac.push_back(row);
      }
      CHECK(testing::gauss_det(jac) != 0);
    }
}
