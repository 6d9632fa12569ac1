#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exact/poly.hpp"
#include "loopsym/var_array.hpp"

namespace lsym::hopf {

/// Polynomial in the free generators E(k, r) = e_k^(r). Stored as a
/// SparsePoly whose variable "site" is the degree k and "color" is r.
using EPoly = SparsePoly;

/// E(k, r) with colors mod n; 1 for k = 0 and 0 for k < 0.
EPoly E(int k, long r, int n);

/// Sum of k over the generators E(k, r) of m, with multiplicity.
int graded_degree(const Monomial& m);

std::string to_string(const EPoly& p);

/// Finite sum of pure tensors a_1 (x) ... (x) a_arity of monomials in the
/// generators, with collected big-rational coefficients.
class ETensor {
 public:
  using Key = std::vector<Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          CanonicalLess{});
    }
  };
  using TermMap = std::map<Key, Rational, KeyLess>;

  explicit ETensor(std::size_t arity = 2) : arity_(arity) {}
  /// p_1 (x) ... (x) p_k expanded.
  static ETensor pure(const std::vector<EPoly>& factors);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Key& key, const Rational& c);

  ETensor& operator+=(const ETensor& o);
  friend ETensor operator+(ETensor a, const ETensor& b) { return a += b; }
  friend ETensor operator-(const ETensor& a, const ETensor& b);
  /// Componentwise product in the tensor power of the algebra.
  friend ETensor operator*(const ETensor& a, const ETensor& b);
  friend bool operator==(const ETensor& a, const ETensor& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Reverses the order of the factors.
  ETensor flipped() const;
  /// Replaces slot by f(component), inserting the arity of f's output.
  ETensor expand_slot(std::size_t slot, const std::function<ETensor(const EPoly&)>& f) const;
  /// Applies a linear map EPoly -> EPoly to one slot.
  ETensor map_slot(std::size_t slot, const std::function<EPoly(const EPoly&)>& f) const;
  /// Multiplies all components together.
  EPoly multiply_out() const;

  std::string to_string() const;

 private:
  std::size_t arity_;
  TermMap terms_;
};

/// Algebra map extending Delta(e_i^(k)) = sum_j e_j^(k) (x) e_{i-j}^(k+j).
ETensor coproduct(const EPoly& p, int n);
/// Constant term.
Rational counit(const EPoly& p);

/// Algebra map extending S(e_i^(k)) = sign * s_(i)^(k+i-1), where sign is
/// (-1)^i when signed and s_(i) is expanded by the loop Jacobi-Trudi
/// determinant.
EPoly antipode(const EPoly& p, int n, bool signed_convention = true);

/// sum_j S(e_j^(k)) e_{i-j}^(k+j) == 0.
bool antipode_axiom_check(int i, long k, int n, bool signed_convention = true);

/// Substitutes e_k^(r) of the given variables for every generator.
SparsePoly to_loop_polynomial(const EPoly& p, const loop::LoopVarArray& vars);

struct HopfReport {
  std::string name;
  int checked = 0;
  int failed = 0;
};

/// Coassociativity, counit, grading and antipode suites on generators
/// E(i, k) with i <= max_i and all colors.
std::vector<HopfReport> hopf_suites(int n, int max_i, bool signed_convention = true);

}  // namespace lsym::hopf
