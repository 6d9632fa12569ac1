#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exact/poly.hpp"

namespace lsym {

/// Quotient num/den of sparse polynomials.
///
/// No multivariate gcd is taken. The denominator is kept as a monomial times a
/// list of primitive polynomial factors with positive leading coefficient;
/// a factor is cancelled whenever it divides the numerator exactly. Constants
/// are folded into num. Equality is decided by cross-multiplication
/// (rational_eq).
class RationalExpr {
 public:
  struct DenFactor {
    SparsePoly poly;
    std::uint32_t exp = 1;
  };

  RationalExpr() = default;
  RationalExpr(const Rational& c);  // NOLINT
  RationalExpr(long c) : RationalExpr(Rational(c)) {}  // NOLINT
  /// Polynomial; subtraction-free iff every coefficient is positive.
  RationalExpr(SparsePoly num);  // NOLINT
  RationalExpr(SparsePoly num, SparsePoly den, bool subtraction_free);

  /// num / prod factors^exp; the factors need not be normalized.
  static RationalExpr from_factors(SparsePoly num, std::vector<DenFactor> factors,
                                   bool subtraction_free);
  static RationalExpr var(VarId v) { return RationalExpr(SparsePoly::var(v)); }

  const SparsePoly& num() const noexcept { return num_; }
  const SparsePoly& den() const noexcept { return den_; }
  const std::vector<DenFactor>& den_factors() const noexcept { return factors_; }
  /// den() = den_monomial() * prod den_factors().
  const Monomial& den_monomial() const noexcept { return den_mono_; }
  bool subtraction_free() const noexcept { return subtraction_free_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Polynomial form when the denominator is constant; otherwise unchanged.
  RationalExpr reduced() const;

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  /// Throws Error(DenominatorVanishes) when b is identically zero.
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);

  std::string to_string() const;

 private:
  RationalExpr(SparsePoly num, Monomial den_mono, std::vector<DenFactor> factors,
               bool subtraction_free);
  void normalize(bool try_cancel);

  SparsePoly num_;
  Monomial den_mono_;
  std::vector<DenFactor> factors_;
  SparsePoly den_{1};
  bool subtraction_free_ = true;
};

/// a == b as rational functions: a.num*b.den - b.num*a.den == 0.
bool rational_eq(const RationalExpr& a, const RationalExpr& b);

using Bindings = std::map<VarId, RationalExpr>;
using Point = std::map<VarId, Rational>;

/// Replaces bound variables simultaneously; unbound variables stay fixed.
/// Throws Error(DenominatorVanishes) if the composed denominator is zero.
RationalExpr substitute(const RationalExpr& e, const Bindings& bindings);
RationalExpr substitute(const SparsePoly& p, const Bindings& bindings);

/// Exact value at a point assigning every variable of e.
Rational eval_at(const RationalExpr& e, const Point& point);
Rational eval_at(const SparsePoly& p, const Point& point);

template <>
struct FieldTraits<RationalExpr> {
  static RationalExpr zero() { return RationalExpr{}; }
  static RationalExpr one() { return RationalExpr{1}; }
  static RationalExpr from_rational(const Rational& q) { return RationalExpr{q}; }
  static bool is_zero(const RationalExpr& e) { return e.is_zero(); }
};

}  // namespace lsym
