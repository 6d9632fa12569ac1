#include "loopsym/var_array.hpp"

#include "common/error.hpp"
#include "exact/ratexpr.hpp"

namespace lsym::loop {

LoopVarArray LoopVarArray::symbolic(int n, int m) {
  require(n >= 1, "n must be positive");
  require(m >= 0, "m must be nonnegative");
  LoopVarArray a;
  a.n_ = n;
  a.m_ = m;
  return a;
}

LoopVarArray LoopVarArray::numeric(int n, std::vector<std::vector<Rational>> values) {
  require(n >= 1, "n must be positive");
  for (const auto& row : values)
    require(static_cast<int>(row.size()) == n, "each site needs exactly n values");
  LoopVarArray a;
  a.n_ = n;
  a.m_ = static_cast<int>(values.size());
  a.values_ = std::move(values);
  return a;
}

const std::vector<std::vector<Rational>>& LoopVarArray::values() const {
  require(values_.has_value(), "symbolic array has no numeric values");
  return *values_;
}

SparsePoly LoopVarArray::entry(int site, long color) const {
  require(site >= 1 && site <= m_, "site out of range");
  VarId v = var(site, color);
  if (!values_) return SparsePoly::var(v);
  return SparsePoly((*values_)[site - 1][v.color - 1]);
}

Point LoopVarArray::as_point() const {
  Point p;
  const auto& vals = values();
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j) p[var(i, j)] = vals[i - 1][j - 1];
  return p;
}

}  // namespace lsym::loop
