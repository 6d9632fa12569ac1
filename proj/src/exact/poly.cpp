#include "exact/poly.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"

namespace lsym {

SparsePoly::SparsePoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

SparsePoly SparsePoly::var(VarId v) { return monomial(Monomial::of(v)); }

SparsePoly SparsePoly::monomial(Monomial m, Rational c) {
  SparsePoly p;
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return CanonicalLess{}(a.mono, b.mono);
  });
  SparsePoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int SparsePoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

bool SparsePoly::is_homogeneous() const noexcept {
  return terms_.empty() ||
         terms_.front().mono.degree() == terms_.back().mono.degree();
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return CanonicalLess{}(t.mono, key);
                             });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

const SparsePoly::Term& SparsePoly::leading_term() const {
  require(!terms_.empty(), "leading term of zero polynomial");
  // The top-degree block sits at the end; its first element is lex-greatest.
  auto top = terms_.back().mono.degree();
  std::size_t i = terms_.size() - 1;
  while (i > 0 && terms_[i - 1].mono.degree() == top) --i;
  return terms_[i];
}

bool SparsePoly::all_coefficients_positive() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return sgn(t.coef) > 0; });
}

std::vector<VarId> SparsePoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.var);
  return {vs.begin(), vs.end()};
}

std::uint32_t SparsePoly::degree_in(VarId v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

SparsePoly SparsePoly::merge(const SparsePoly& a, const SparsePoly& b,
                             int sign) {
  SparsePoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  CanonicalLess less;
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && less(i->mono, j->mono))) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || less(j->mono, i->mono)) {
      out.terms_.push_back({j->mono, sign > 0 ? j->coef : Rational(-j->coef)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coef + j->coef)
                            : Rational(i->coef - j->coef);
      if (sgn(c) != 0) out.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  return *this = merge(*this, o, +1);
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.terms_.empty()) return *this;
  return *this = merge(*this, o, -1);
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  return *this = *this * o;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return SparsePoly{};
  if (a.is_constant()) return SparsePoly(b) *= a.terms_[0].coef;
  if (b.is_constant()) return SparsePoly(a) *= b.terms_[0].coef;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
      if (fresh) {
        it->second = s.coef * t.coef;
      } else {
        it->second += s.coef * t.coef;
      }
    }
  }
  std::vector<SparsePoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const SparsePoly::Term& x, const SparsePoly::Term& y) {
              return CanonicalLess{}(x.mono, y.mono);
            });
  SparsePoly out;
  out.terms_ = std::move(terms);
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result(1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coef != b.terms_[i].coef)
      return false;
  }
  return true;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coef);
    bool neg = sgn(t.coef) < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += t.mono.to_string();
    } else {
      s += mag.get_str() + "*" + t.mono.to_string();
    }
  }
  return s;
}

SparsePoly partial_derivative(const SparsePoly& p, VarId v) {
  std::vector<SparsePoly::Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono.exponent(v);
    if (e == 0) continue;
    auto reduced = t.mono.divide(Monomial::of(v));
    out.push_back({*reduced, t.coef * e});
  }
  return SparsePoly::from_terms(std::move(out));
}

std::optional<SparsePoly> divide_exact(const SparsePoly& a,
                                       const SparsePoly& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  if (a.is_zero()) return SparsePoly{};
  const auto& lead = b.leading_term();
  SparsePoly rem = a;
  std::vector<SparsePoly::Term> quotient;
  // If b | a, every intermediate remainder is a multiple of b, so its
  // leading monomial is divisible by lead.mono.
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    auto q = lt.mono.divide(lead.mono);
    if (!q) return std::nullopt;
    Rational c = lt.coef / lead.coef;
    SparsePoly step = SparsePoly::monomial(*q, c);
    quotient.push_back({*q, c});
    rem -= step * b;
  }
  return SparsePoly::from_terms(std::move(quotient));
}

}  // namespace lsym
