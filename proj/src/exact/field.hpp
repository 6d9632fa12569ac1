#pragma once

#include <cmath>

#include "exact/rational.hpp"

namespace lsym {

/// Minimal algebraic interface used by the generic algorithms (determinants,
/// matrix products, swap formulas). Specialized per scalar type.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
};

template <>
struct FieldTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
};

}  // namespace lsym
