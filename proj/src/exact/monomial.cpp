#include "exact/monomial.hpp"

#include <algorithm>

namespace lsym {

Monomial Monomial::of(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, const VarId& key) { return f.var < key; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& f : other.factors_) {
    while (a != factors_.end() && a->var < f.var) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->var != f.var || a->exp < f.exp) {
      return std::nullopt;
    }
    if (a->exp > f.exp) out.factors_.push_back({a->var, a->exp - f.exp});
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var < j->var) {
      ++i;
    } else if (j->var < i->var) {
      ++j;
    } else {
      auto e = std::min(i->exp, j->exp);
      out.factors_.push_back({i->var, e});
      out.degree_ += e;
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::pow(std::uint32_t e) const {
  if (e == 0) return Monomial{};
  Monomial out = *this;
  for (auto& f : out.factors_) f.exp *= e;
  out.degree_ *= e;
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : factors_) {
    h ^= std::hash<std::uint64_t>{}(f.var.key() * 31 + f.exp);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    if (f.exp == 1) {
      s += f.var.to_string();
    } else {
      s += '(' + f.var.to_string() + ")^" + std::to_string(f.exp);
    }
  }
  return s;
}

int lex_compare(const Monomial& a, const Monomial& b) noexcept {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var == fb[j].var) {
      if (fa[i].exp != fb[j].exp) return fa[i].exp > fb[j].exp ? 1 : -1;
      ++i;
      ++j;
    } else if (fa[i].var < fb[j].var) {
      return 1;
    } else {
      return -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

}  // namespace lsym
