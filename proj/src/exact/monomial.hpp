#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exact/var.hpp"

namespace lsym {

/// A power product of VarIds, kept sorted by variable with positive exponents.
class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exp = 1);
  /// Factors may be unsorted and contain repeats or zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent(VarId v) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t e) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Lexicographic comparison of exponent vectors with x[1]^(1) > x[1]^(2) > ...
/// Returns >0 when a is lex-greater.
int lex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Canonical term order used for storage and printing: total degree
/// ascending, then lex-greater first.
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace lsym
