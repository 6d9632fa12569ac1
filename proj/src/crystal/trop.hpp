#pragma once

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "exact/field.hpp"
#include "exact/ratexpr.hpp"

namespace lsym::crystal {

/// Element of the min-plus semifield: + is min, * is +, / is -.
/// The additive identity is +infinity.
struct Trop {
  long v = 0;
  bool inf = false;

  static Trop infinity() { return Trop{0, true}; }

  friend Trop operator+(Trop a, Trop b) {
    if (a.inf) return b;
    if (b.inf) return a;
    return Trop{std::min(a.v, b.v), false};
  }
  friend Trop operator*(Trop a, Trop b) {
    if (a.inf || b.inf) return infinity();
    return Trop{a.v + b.v, false};
  }
  friend Trop operator/(Trop a, Trop b) {
    require(!b.inf, "tropical division by infinity");
    if (a.inf) return infinity();
    return Trop{a.v - b.v, false};
  }
  friend bool operator==(const Trop&, const Trop&) = default;
};

using TropPoint = std::map<VarId, long>;

/// Expression tree over variables and integer constants with min, + and -.
class TropExpr {
 public:
  enum class Kind { Const, Var, Min, Sum, Diff };

  static TropExpr constant(long c);
  static TropExpr var(VarId v);
  static TropExpr min_of(std::vector<TropExpr> args);
  static TropExpr sum_of(std::vector<TropExpr> args);
  static TropExpr diff(TropExpr a, TropExpr b);

  Kind kind() const noexcept { return node_->kind; }
  /// Throws InvalidArgument if the point misses a variable.
  long eval(const TropPoint& point) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind = Kind::Const;
    long value = 0;
    VarId var;
    std::vector<TropExpr> args;
  };
  explicit TropExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// trop(num) - trop(den) where trop of a polynomial with positive
/// coefficients is the min over terms of the exponent-weighted variable sums.
/// Throws NotSubtractionFree unless f is flagged subtraction-free and both
/// num and den have only positive coefficients.
TropExpr tropicalize(const RationalExpr& f);
TropExpr tropicalize(const SparsePoly& p);

long trop_eval(const TropExpr& e, const TropPoint& point);

}  // namespace lsym::crystal

namespace lsym {

template <>
struct FieldTraits<crystal::Trop> {
  static crystal::Trop zero() { return crystal::Trop::infinity(); }
  static crystal::Trop one() { return crystal::Trop{0, false}; }
  /// Positive constants have valuation zero.
  static crystal::Trop from_rational(const Rational& q) {
    require(sgn(q) > 0, "only positive constants tropicalize");
    return one();
  }
  static bool is_zero(const crystal::Trop& t) { return t.inf; }
};

}  // namespace lsym
