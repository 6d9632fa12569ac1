#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "exact/field.hpp"
#include "exact/monomial.hpp"
#include "exact/rational.hpp"

namespace lsym {

/// Sparse multivariate polynomial with big-rational coefficients.
///
/// Terms are stored in CanonicalLess order with nonzero coefficients and
/// unique monomials, so structural equality is polynomial equality.
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
  };

  SparsePoly() = default;
  SparsePoly(const Rational& c);  // NOLINT: constants convert implicitly
  SparsePoly(long c) : SparsePoly(Rational(c)) {}  // NOLINT

  static SparsePoly var(VarId v);
  static SparsePoly monomial(Monomial m, Rational c = 1);
  /// Collects like terms and drops zeros.
  static SparsePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  /// Greatest term in graded-lex order.
  const Term& leading_term() const;
  bool all_coefficients_positive() const noexcept;
  std::vector<VarId> variables() const;
  /// Highest exponent of v over all terms.
  std::uint32_t degree_in(VarId v) const noexcept;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  /// Canonical printing, e.g. "x[1]^(1)*x[2]^(2) + 2*(x[3]^(1))^2 - 1".
  std::string to_string() const;

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, int sign);
  std::vector<Term> terms_;
};

SparsePoly partial_derivative(const SparsePoly& p, VarId v);

/// a / b when b divides a exactly, found by graded-lex division.
std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b);

/// Applies f to every variable: x_v -> x_{f(v)} (monomials are rebuilt).
template <class Fn>
SparsePoly rename_variables(const SparsePoly& p, Fn&& f) {
  std::vector<SparsePoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& fac : t.mono.factors()) fs.push_back({f(fac.var), fac.exp});
    out.push_back({Monomial::from_factors(std::move(fs)), t.coef});
  }
  return SparsePoly::from_terms(std::move(out));
}

/// Evaluates p with each variable replaced by value_of(v), in any commutative
/// ring F described by FieldTraits.
template <class F, class ValueOf>
F evaluate(const SparsePoly& p, ValueOf&& value_of) {
  using Tr = FieldTraits<F>;
  std::unordered_map<VarId, std::vector<F>> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const F& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(Tr::one());
      cache.push_back(value_of(v));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  F acc = Tr::zero();
  for (const auto& t : p.terms()) {
    F term = Tr::from_rational(t.coef);
    for (const auto& f : t.mono.factors()) term = term * power(f.var, f.exp);
    acc = acc + term;
  }
  return acc;
}

template <>
struct FieldTraits<SparsePoly> {
  static SparsePoly zero() { return SparsePoly{}; }
  static SparsePoly one() { return SparsePoly{1}; }
  static SparsePoly from_rational(const Rational& q) { return SparsePoly{q}; }
  static bool is_zero(const SparsePoly& p) { return p.is_zero(); }
};

}  // namespace lsym
