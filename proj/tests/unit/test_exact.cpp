#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "exact/det.hpp"
#include "exact/parse.hpp"
#include "exact/ratexpr.hpp"
#include "support/support.hpp"

using namespace lsym;
using lsym::testing::X;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, int vars, int terms, int max_deg) {
  std::uniform_int_distribution<int> site(1, vars), deg(0, max_deg), coef(-9, 9);
  SparsePoly p;
  for (int t = 0; t < terms; ++t) {
    SparsePoly mono(coef(rng));
    int d = deg(rng);
    for (int i = 0; i < d; ++i) mono *= X(site(rng), 1, 1);
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x + SparsePoly() == x);
  const SparsePoly a = X(1, 1, 2) + X(2, 1, 2), b = X(1, 2, 2);
  const SparsePoly prod = a * b;
  CHECK(prod == X(1, 1, 2) * X(1, 2, 2) + X(2, 1, 2) * X(1, 2, 2));
  CHECK(prod.size() <= a.size() * b.size());
  CHECK((x - x).is_zero());
  CHECK((x * y).degree() == 2);
  CHECK(SparsePoly().degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(rng, 4, 5, 3), b = random_poly(rng, 4, 5, 3),
         c = random_poly(rng, 4, 5, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("canonical printing") {
  const SparsePoly p = X(2, 1, 2) * X(1, 2, 2) + X(1, 1, 2) + SparsePoly(-3) +
                       X(1, 1, 2) * X(1, 1, 2) * 2;
  CHECK(p.to_string() == "-3 + x[1]^(1) + 2*(x[1]^(1))^2 + x[1]^(2)*x[2]^(1)");
}

TEST_CASE("rational_eq examples") {
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1);
  const RationalExpr xy(x, y, true);
  CHECK(rational_eq(xy, xy));
  CHECK(rational_eq(RationalExpr(x * x - y * y, x - y, false), RationalExpr(x + y)));
  CHECK_FALSE(rational_eq(xy, RationalExpr(y, x, true)));
}

TEST_CASE("rational expression normalization") {
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1);
  RationalExpr e(x * 2, y * -4, true);
  CHECK(rational_eq(e, RationalExpr(-x, y * 2, false)));
  CHECK(e.den().leading_term().coef > 0);
  CHECK_THROWS_AS(RationalExpr(x, SparsePoly(), true), Error);
  RationalExpr q(x * x - y * y, x - y, false);
  CHECK(q.reduced().is_polynomial());
  CHECK(q.reduced().num() == x + y);
}

TEST_CASE("rational_eq agrees with evaluation at random points") {
  std::mt19937_64 rng(11);
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1), z = X(3, 1, 1);
  const RationalExpr a(x * y + z, x + y, true);
  const RationalExpr b(x * y * z + z * z, x * z + y * z, true);  // a times z/z
  const RationalExpr c(x * y + z, x + z, true);
  REQUIRE(rational_eq(a, b));
  REQUIRE_FALSE(rational_eq(a, c));
  int differ = 0;
  for (int i = 0; i < 20; ++i) {
    Point p = testing::random_point(rng, 1, 3);
    CHECK(eval_at(a, p) == eval_at(b, p));
    if (eval_at(a, p) != eval_at(c, p)) ++differ;
  }
  CHECK(differ == 20);
}

TEST_CASE("substitute examples") {
  const VarId vx = VarId::make(1, 1, 1), vy = VarId::make(2, 1, 1);
  const SparsePoly x = SparsePoly::var(vx), y = SparsePoly::var(vy);
  auto swapped = substitute(RationalExpr(x + y), {{vx, RationalExpr(y)}, {vy, RationalExpr(x)}});
  CHECK(rational_eq(swapped, RationalExpr(x + y)));
  auto half = substitute(RationalExpr(x, y, true), {{vx, RationalExpr(1)}, {vy, RationalExpr(2)}});
  CHECK(rational_eq(half, RationalExpr(make_rational(1, 2))));
  CHECK_THROWS_AS(substitute(RationalExpr(x, y, true), {{vy, RationalExpr(0)}}), Error);
  // Subtraction-free inputs stay subtraction-free.
  auto sf = substitute(RationalExpr(x, x + y, true),
                       {{vx, RationalExpr(y, x + y, true)}, {vy, RationalExpr(x * y)}});
  CHECK(sf.subtraction_free());
}

TEST_CASE("substitute then evaluate equals evaluating composed bindings") {
  std::mt19937_64 rng(5);
  const int vars = 3;
  for (int trial = 0; trial < 15; ++trial) {
    RationalExpr e(random_poly(rng, vars, 4, 2), random_poly(rng, vars, 3, 2) + SparsePoly(100),
                   false);
    Bindings b;
    for (int i = 1; i <= vars; ++i)
      b[VarId::make(i, 1, 1)] = RationalExpr(random_poly(rng, vars, 3, 2) + SparsePoly(1),
                                            X(i, 1, 1) + SparsePoly(50), false);
    RationalExpr composed;
    try {
      composed = substitute(e, b);
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < 5; ++k) {
      Point p = testing::random_point(rng, 1, vars, 1000);
      Point inner;
      bool ok = true;
      for (auto& [v, be] : b) {
        try {
          inner[v] = eval_at(be, p);
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok) continue;
      Rational lhs, rhs;
      try {
        rhs = eval_at(e, inner);
      } catch (const Error&) {
        continue;
      }
      lhs = eval_at(composed, p);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("eval_at examples") {
  const VarId vx = VarId::make(1, 1, 1), vy = VarId::make(2, 1, 1);
  const SparsePoly x = SparsePoly::var(vx), y = SparsePoly::var(vy);
  CHECK(eval_at(x + y, Point{{vx, 1}, {vy, 2}}) == 3);
  try {
    eval_at(RationalExpr(x, x - y, false), Point{{vx, 1}, {vy, 1}});
    FAIL("expected DenominatorVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorVanishes);
  }
  CHECK_THROWS_AS(eval_at(x + y, Point{{vx, 1}}), Error);
}

TEST_CASE("subtraction-free expressions are positive at positive points") {
  std::mt19937_64 rng(3);
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1), z = X(3, 1, 1);
  RationalExpr e = RationalExpr(x * y + z) / RationalExpr(x + y * z);
  e = e * e + RationalExpr(z, x, true);
  REQUIRE(e.subtraction_free());
  for (int i = 0; i < 20; ++i) CHECK(eval_at(e, testing::random_point(rng, 1, 3)) > 0);
  CHECK_FALSE((RationalExpr(x) - RationalExpr(y)).subtraction_free());
}

TEST_CASE("partial derivatives") {
  const VarId vx = VarId::make(1, 1, 1), vy = VarId::make(2, 1, 1);
  const SparsePoly x = SparsePoly::var(vx), y = SparsePoly::var(vy);
  CHECK(partial_derivative(x * x, vx) == x * 2);
  CHECK(partial_derivative(x * y, vy) == x);
  CHECK(partial_derivative(x, vy).is_zero());
  // d/dx_1^(1) of x1(1)x2(2) + x2(1)x3(2) + x1(1)x3(2).
  const SparsePoly e2 = X(1, 1, 2) * X(2, 2, 2) + X(2, 1, 2) * X(3, 2, 2) +
                        X(1, 1, 2) * X(3, 2, 2);
  CHECK(partial_derivative(e2, VarId::make(1, 1, 2)) == X(2, 2, 2) + X(3, 2, 2));
}

TEST_CASE("exact division") {
  const SparsePoly x = X(1, 1, 1), y = X(2, 1, 1);
  auto q = divide_exact(x * x * x - y * y * y, x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x * x + x * y + y * y);
  CHECK_FALSE(divide_exact(x * x + y, x).has_value());
}

TEST_CASE("division-free determinant") {
  std::vector<std::vector<Rational>> a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(a) == testing::gauss_det(a));
  std::vector<std::vector<SparsePoly>> v{{1, X(1, 1, 1)}, {1, X(2, 1, 1)}};
  CHECK(determinant(v) == X(2, 1, 1) - X(1, 1, 1));
  CHECK(determinant(std::vector<std::vector<Rational>>{}) == 1);
}

TEST_CASE("variable identity is color mod n") {
  CHECK(VarId::make(1, 4, 3) == VarId::make(1, 1, 3));
  CHECK(VarId::make(2, 0, 3) == VarId::make(2, 3, 3));
  CHECK(VarId::make(2, -1, 3).color == 2);
  CHECK(VarId::make(1, 2, 3).to_string() == "x[1]^(2)");
}

TEST_CASE("parsing canonical strings") {
  const SparsePoly x = X(1, 1, 2), y = X(2, 2, 2);
  CHECK(rational_eq(parse_expression("x[1]^(1)*x[2]^(2) - 3/4", 2), x * y - SparsePoly(Rational(3, 4))));
  CHECK(rational_eq(parse_expression("(x[1]^(3))^2", 2), x * x));  // color 3 = 1 mod 2
  CHECK(rational_eq(parse_expression("-(x[1]^(1) + 2)", 2), -(x + SparsePoly(2))));
  const auto q = parse_expression("(x[1]^(1) + x[2]^(2))/(x[2]^(2))", 2);
  CHECK(q.subtraction_free());
  CHECK(rational_eq(q, RationalExpr(x + y, y, true)));
  for (const char* bad : {"", "x[1]", "x[0]^(1)", "1 +", "(1", "2^-1", "y", "1 2"})
    CHECK_THROWS_AS(parse_expression(bad, 2), Error);
  try {
    parse_expression("x[1]^(1) + ?", 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("printing then parsing is the identity") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const SparsePoly p = random_poly(rng, 3, 5, 3);
    CHECK(rational_eq(parse_expression(p.to_string(), 1), p));
    const SparsePoly d = random_poly(rng, 3, 3, 2);
    if (d.is_zero()) continue;
    const RationalExpr e(p, d, false);
    CHECK(rational_eq(parse_expression(e.to_string(), 1), e));
  }
}
