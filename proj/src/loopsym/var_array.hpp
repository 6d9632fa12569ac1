#pragma once

#include <optional>
#include <vector>

#include "exact/ratexpr.hpp"

namespace lsym::loop {

/// The n x m array x_i^(j): m sites, each carrying n colored entries.
/// Either fully symbolic or fully numeric (big-rational).
class LoopVarArray {
 public:
  static LoopVarArray symbolic(int n, int m);
  /// values[i][j] is x_{i+1}^{(j+1)}; every row must have n entries.
  static LoopVarArray numeric(int n, std::vector<std::vector<Rational>> values);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  bool is_symbolic() const noexcept { return !values_.has_value(); }
  const std::vector<std::vector<Rational>>& values() const;

  /// x_site^(color) as a polynomial; color is reduced mod n.
  SparsePoly entry(int site, long color) const;
  VarId var(int site, long color) const { return VarId::make(site, color, n_); }
  /// Point assigning every variable of the symbolic array of the same size.
  Point as_point() const;

 private:
  int n_ = 1;
  int m_ = 0;
  std::optional<std::vector<std::vector<Rational>>> values_;
};

}  // namespace lsym::loop
