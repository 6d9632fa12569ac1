#pragma once

#include <algorithm>
#include <vector>

#include "common/error.hpp"
#include "exact/field.hpp"

namespace lsym::loop {

/// Dense univariate polynomial in t, coefficient of t^d at index d, with no
/// trailing zero coefficients.
template <class S>
using UPoly = std::vector<S>;

template <class S>
void trim(UPoly<S>& p) {
  while (!p.empty() && FieldTraits<S>::is_zero(p.back())) p.pop_back();
}

template <class S>
UPoly<S> upoly_mul(const UPoly<S>& a, const UPoly<S>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<S> out(a.size() + b.size() - 1, FieldTraits<S>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (FieldTraits<S>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (FieldTraits<S>::is_zero(b[j])) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

template <class S>
UPoly<S> upoly_add(const UPoly<S>& a, const UPoly<S>& b) {
  UPoly<S> out(std::max(a.size(), b.size()), FieldTraits<S>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  trim(out);
  return out;
}

/// n x n matrix with entries in S[t]; indices are 0-based.
template <class S>
class MatrixPoly {
 public:
  MatrixPoly() = default;
  explicit MatrixPoly(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    require(n >= 1, "matrix size must be positive");
  }

  static MatrixPoly identity(int n) {
    MatrixPoly m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = {FieldTraits<S>::one()};
    return m;
  }

  int n() const noexcept { return n_; }
  UPoly<S>& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
  const UPoly<S>& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * n_ + c];
  }
  /// Coefficient of t^d in entry (r, c).
  S coeff(int r, int c, int d) const {
    const auto& p = at(r, c);
    return (d >= 0 && d < static_cast<int>(p.size())) ? p[d] : FieldTraits<S>::zero();
  }
  void set_coeff(int r, int c, int d, S value) {
    auto& p = at(r, c);
    if (static_cast<int>(p.size()) <= d) p.resize(d + 1, FieldTraits<S>::zero());
    p[d] = std::move(value);
    trim(p);
  }
  /// Largest t-degree over all entries, -1 for the zero matrix.
  int degree() const noexcept {
    int d = -1;
    for (const auto& p : entries_) d = std::max(d, static_cast<int>(p.size()) - 1);
    return d;
  }

  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    require(a.n_ == b.n_, "matrix size mismatch");
    MatrixPoly out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a.at(i, k).empty()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (b.at(k, j).empty()) continue;
          out.at(i, j) = upoly_add(out.at(i, j), upoly_mul(a.at(i, k), b.at(k, j)));
        }
      }
    return out;
  }

  template <class T, class Fn>
  MatrixPoly<T> map(Fn&& f) const {
    MatrixPoly<T> out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        auto& dst = out.at(i, j);
        for (const auto& c : at(i, j)) dst.push_back(f(c));
        trim(dst);
      }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<UPoly<S>> entries_;
};

/// Entrywise comparison with a caller-supplied scalar equality.
template <class S, class Eq>
bool matrices_equal(const MatrixPoly<S>& a, const MatrixPoly<S>& b, Eq&& eq) {
  if (a.n() != b.n()) return false;
  const int deg = std::max(a.degree(), b.degree());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      for (int d = 0; d <= deg; ++d)
        if (!eq(a.coeff(i, j, d), b.coeff(i, j, d))) return false;
  return true;
}

/// Whirl M(a_1..a_n): ones on the diagonal, a_1..a_{n-1} on the
/// superdiagonal, a_n * t in the lower-left corner; 1 + a t when n = 1.
template <class S>
MatrixPoly<S> whirl(const std::vector<S>& params) {
  const int n = static_cast<int>(params.size());
  require(n >= 1, "whirl needs at least one parameter");
  MatrixPoly<S> m = MatrixPoly<S>::identity(n);
  if (n == 1) {
    m.set_coeff(0, 0, 1, params[0]);
    return m;
  }
  for (int i = 0; i + 1 < n; ++i) m.set_coeff(i, i + 1, 0, params[i]);
  m.set_coeff(n - 1, 0, 1, params[n - 1]);
  return m;
}

/// M(sites[0]) * M(sites[1]) * ... ; identity of size n for no sites.
template <class S>
MatrixPoly<S> whirl_product(int n, const std::vector<std::vector<S>>& sites) {
  MatrixPoly<S> p = MatrixPoly<S>::identity(n);
  for (const auto& site : sites) {
    require(static_cast<int>(site.size()) == n, "site parameter count must equal n");
    p = p * whirl(site);
  }
  return p;
}

}  // namespace lsym::loop
