#include "exact/ratexpr.hpp"

#include <vector>

#include "common/error.hpp"

namespace lsym {

namespace {

// Largest rational c with p/c a primitive integer polynomial, sign chosen so
// that the leading coefficient of p/c is positive.
Rational primitive_factor(const SparsePoly& p) {
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (sgn(p.leading_term().coef) < 0) c = -c;
  return c;
}

Monomial common_monomial(const SparsePoly& p) {
  if (p.is_zero()) return Monomial{};
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

SparsePoly divide_by_monomial(const SparsePoly& p, const Monomial& m) {
  std::vector<SparsePoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({*t.mono.divide(m), t.coef});
  return SparsePoly::from_terms(std::move(out));
}

// Monomial minimal in graded-lex order: lowest degree, then lex-smallest.
const Monomial& trailing_monomial(const SparsePoly& p) {
  const auto& terms = p.terms();
  const std::uint32_t d = terms.front().mono.degree();
  std::size_t i = 0;
  while (i + 1 < terms.size() && terms[i + 1].mono.degree() == d) ++i;
  return terms[i].mono;
}

// num / f when f divides num exactly. Cheap necessary conditions first:
// leading and trailing monomials of a product are products of those.
std::optional<SparsePoly> try_divide(const SparsePoly& num, const SparsePoly& f) {
  if (num.is_zero() || f.degree() > num.degree()) return std::nullopt;
  if (!num.leading_term().mono.divide(f.leading_term().mono)) return std::nullopt;
  if (!trailing_monomial(num).divide(trailing_monomial(f))) return std::nullopt;
  return divide_exact(num, f);
}

using DenFactor = RationalExpr::DenFactor;

void add_factor(std::vector<DenFactor>& fs, const SparsePoly& p, std::uint32_t e) {
  if (e == 0) return;
  for (auto& f : fs)
    if (f.poly == p) {
      f.exp += e;
      return;
    }
  fs.push_back({p, e});
}

std::uint32_t exponent_of(const std::vector<DenFactor>& fs, const SparsePoly& p) {
  for (const auto& f : fs)
    if (f.poly == p) return f.exp;
  return 0;
}

// Divides num by factors of fs as often as possible, lowering exponents.
void cancel_into(SparsePoly& num, std::vector<DenFactor>& fs) {
  for (auto& f : fs)
    while (f.exp > 0) {
      auto q = try_divide(num, f.poly);
      if (!q) break;
      num = std::move(*q);
      --f.exp;
    }
}

SparsePoly monomial_poly(const Monomial& m) { return SparsePoly::monomial(m); }

}  // namespace

RationalExpr::RationalExpr(const Rational& c)
    : num_(c), subtraction_free_(sgn(c) >= 0) {}

RationalExpr::RationalExpr(SparsePoly num)
    : num_(std::move(num)),
      subtraction_free_(num_.all_coefficients_positive()) {}

RationalExpr::RationalExpr(SparsePoly num, SparsePoly den,
                           bool subtraction_free)
    : num_(std::move(num)), subtraction_free_(subtraction_free) {
  if (den.is_zero()) {
    fail(ErrorCode::DenominatorVanishes, "rational expression with zero denominator");
  }
  factors_.push_back({std::move(den), 1});
  normalize(true);
}

RationalExpr::RationalExpr(SparsePoly num, Monomial den_mono, std::vector<DenFactor> factors,
                           bool subtraction_free)
    : num_(std::move(num)),
      den_mono_(std::move(den_mono)),
      factors_(std::move(factors)),
      subtraction_free_(subtraction_free) {}

RationalExpr RationalExpr::from_factors(SparsePoly num, std::vector<DenFactor> factors,
                                        bool subtraction_free) {
  for (const auto& f : factors)
    if (f.poly.is_zero() && f.exp > 0)
      fail(ErrorCode::DenominatorVanishes, "rational expression with zero denominator");
  RationalExpr out(std::move(num), Monomial{}, std::move(factors), subtraction_free);
  out.normalize(true);
  return out;
}

void RationalExpr::normalize(bool try_cancel) {
  if (num_.is_zero()) {
    den_mono_ = Monomial{};
    factors_.clear();
    den_ = SparsePoly(1);
    return;
  }
  // Split every factor into constant * monomial * primitive part.
  std::vector<DenFactor> fs;
  for (auto& f : factors_) {
    if (f.exp == 0) continue;
    Monomial g = common_monomial(f.poly);
    SparsePoly p = g.is_one() ? std::move(f.poly) : divide_by_monomial(f.poly, g);
    if (!g.is_one()) den_mono_ = den_mono_ * g.pow(f.exp);
    Rational c = primitive_factor(p);
    if (c != 1) {
      p *= Rational(1 / c);
      Rational inv(1);
      for (std::uint32_t i = 0; i < f.exp; ++i) inv /= c;
      num_ *= inv;
    }
    if (p.is_constant()) continue;
    add_factor(fs, p, f.exp);
  }
  factors_ = std::move(fs);
  if (!den_mono_.is_one()) {
    Monomial g = Monomial::gcd(common_monomial(num_), den_mono_);
    if (!g.is_one()) {
      num_ = divide_by_monomial(num_, g);
      den_mono_ = *den_mono_.divide(g);
    }
  }
  if (try_cancel) cancel_into(num_, factors_);
  std::erase_if(factors_, [](const DenFactor& f) { return f.exp == 0; });
  den_ = monomial_poly(den_mono_);
  for (const auto& f : factors_) den_ *= f.poly.pow(f.exp);
}

RationalExpr RationalExpr::reduced() const {
  if (is_polynomial()) return *this;
  RationalExpr out = *this;
  if (auto q = divide_exact(num_, den_)) {
    out.num_ = std::move(*q);
    out.den_mono_ = Monomial{};
    out.factors_.clear();
    out.den_ = SparsePoly(1);
  }
  return out;
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr out = *this;
  out.num_ = -out.num_;
  out.subtraction_free_ = is_zero() && subtraction_free_;
  return out;
}

namespace {

// a/da + sign * b/db over the least common multiple of the factored
// denominators.
RationalExpr combine(const RationalExpr& a, const RationalExpr& b, int sign, bool sf,
                     const Monomial& amono, const Monomial& bmono) {
  std::vector<DenFactor> lcm;
  for (const auto& f : a.den_factors()) add_factor(lcm, f.poly, f.exp);
  for (const auto& f : b.den_factors()) {
    std::uint32_t have = exponent_of(lcm, f.poly);
    if (f.exp > have) add_factor(lcm, f.poly, f.exp - have);
  }
  Monomial mono_lcm = Monomial::gcd(amono, bmono);
  mono_lcm = *(amono * bmono).divide(mono_lcm);
  auto cofactor = [&](const std::vector<DenFactor>& own, const Monomial& m) {
    SparsePoly c = monomial_poly(*mono_lcm.divide(m));
    for (const auto& f : lcm) {
      std::uint32_t e = f.exp - exponent_of(own, f.poly);
      if (e > 0) c *= f.poly.pow(e);
    }
    return c;
  };
  SparsePoly num = a.num() * cofactor(a.den_factors(), amono);
  SparsePoly rhs = b.num() * cofactor(b.den_factors(), bmono);
  if (sign > 0)
    num += rhs;
  else
    num -= rhs;
  if (!mono_lcm.is_one()) lcm.push_back({monomial_poly(mono_lcm), 1});
  return RationalExpr::from_factors(std::move(num), std::move(lcm), sf);
}

}  // namespace

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  bool sf = a.subtraction_free_ && b.subtraction_free_;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RationalExpr out(a.num_ + b.num_, a.den_mono_, a.factors_, sf);
    out.normalize(true);
    return out;
  }
  return combine(a, b, 1, sf, a.den_mono_, b.den_mono_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RationalExpr out(a.num_ - b.num_, a.den_mono_, a.factors_, false);
    out.normalize(true);
    return out;
  }
  return combine(a, b, -1, false, a.den_mono_, b.den_mono_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  bool sf = a.subtraction_free_ && b.subtraction_free_;
  if (a.is_zero() || b.is_zero()) return RationalExpr{};
  // Cancel each side's denominator factors against the other numerator.
  SparsePoly an = a.num_, bn = b.num_;
  std::vector<DenFactor> af = a.factors_, bf = b.factors_;
  cancel_into(bn, af);
  cancel_into(an, bf);
  std::vector<DenFactor> fs = std::move(af);
  for (const auto& f : bf) add_factor(fs, f.poly, f.exp);
  RationalExpr out(an * bn, a.den_mono_ * b.den_mono_, std::move(fs), sf);
  out.normalize(false);
  return out;
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) fail(ErrorCode::DenominatorVanishes, "division by zero expression");
  // 1/b keeps b's factored denominator as its numerator, expanded.
  RationalExpr inv(b.den_, Monomial{}, {{b.num_, 1}}, b.subtraction_free_);
  inv.normalize(false);
  return a * inv;
}

std::string RationalExpr::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rational_eq(const RationalExpr& a, const RationalExpr& b) {
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

RationalExpr substitute(const SparsePoly& p, const Bindings& bindings) {
  // Homogenize per distinct binding denominator: with x_v = N_v / D_g for v in
  // group g, p = (sum_t c_t prod N_v^a_v prod_g D_g^(deg_g - a_g)) / prod_g D_g^deg_g.
  std::vector<SparsePoly> dens;
  std::vector<const RationalExpr*> group_rep;
  std::map<VarId, std::size_t> group_of;
  bool sf = p.all_coefficients_positive() || p.is_zero();
  for (const auto& v : p.variables()) {
    auto it = bindings.find(v);
    if (it == bindings.end()) continue;
    sf = sf && it->second.subtraction_free();
    std::size_t g = 0;
    while (g < dens.size() && !(dens[g] == it->second.den())) ++g;
    if (g == dens.size()) {
      dens.push_back(it->second.den());
      group_rep.push_back(&it->second);
    }
    group_of[v] = g;
  }
  std::vector<std::uint32_t> group_deg(dens.size(), 0);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> d(dens.size(), 0);
    for (const auto& f : t.mono.factors()) {
      auto it = group_of.find(f.var);
      if (it != group_of.end()) d[it->second] += f.exp;
    }
    for (std::size_t g = 0; g < dens.size(); ++g)
      group_deg[g] = std::max(group_deg[g], d[g]);
  }

  std::map<std::pair<VarId, std::uint32_t>, SparsePoly> num_pow;
  std::map<std::pair<std::size_t, std::uint32_t>, SparsePoly> den_pow;
  auto npow = [&](VarId v, std::uint32_t e) -> const SparsePoly& {
    auto key = std::make_pair(v, e);
    auto it = num_pow.find(key);
    if (it == num_pow.end())
      it = num_pow.emplace(key, bindings.at(v).num().pow(e)).first;
    return it->second;
  };
  auto dpow = [&](std::size_t g, std::uint32_t e) -> const SparsePoly& {
    auto key = std::make_pair(g, e);
    auto it = den_pow.find(key);
    if (it == den_pow.end()) it = den_pow.emplace(key, dens[g].pow(e)).first;
    return it->second;
  };

  SparsePoly num;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> d(dens.size(), 0);
    std::vector<Monomial::Factor> fixed;
    SparsePoly term(t.coef);
    for (const auto& f : t.mono.factors()) {
      auto it = group_of.find(f.var);
      if (it == group_of.end()) {
        fixed.push_back(f);
      } else {
        d[it->second] += f.exp;
        term *= npow(f.var, f.exp);
      }
    }
    if (!fixed.empty()) term *= SparsePoly::monomial(Monomial::from_factors(fixed));
    for (std::size_t g = 0; g < dens.size(); ++g) {
      if (group_deg[g] > d[g]) term *= dpow(g, group_deg[g] - d[g]);
    }
    num += term;
  }
  std::vector<RationalExpr::DenFactor> factors;
  for (std::size_t g = 0; g < dens.size(); ++g) {
    if (group_deg[g] == 0) continue;
    const RationalExpr& rep = *group_rep[g];
    if (!rep.den_monomial().is_one())
      factors.push_back({SparsePoly::monomial(rep.den_monomial()), group_deg[g]});
    for (const auto& f : rep.den_factors()) factors.push_back({f.poly, f.exp * group_deg[g]});
  }
  return RationalExpr::from_factors(std::move(num), std::move(factors), sf);
}

RationalExpr substitute(const RationalExpr& e, const Bindings& bindings) {
  RationalExpr num = substitute(e.num(), bindings);
  RationalExpr den = substitute(e.den(), bindings);
  if (den.is_zero()) {
    fail(ErrorCode::DenominatorVanishes,
         "denominator vanishes identically after substitution");
  }
  RationalExpr out = num / den;
  if (!(e.subtraction_free() && num.subtraction_free() && den.subtraction_free())) {
    return RationalExpr(out.num(), out.den(), false);
  }
  return out;
}

Rational eval_at(const SparsePoly& p, const Point& point) {
  return evaluate<Rational>(p, [&](VarId v) -> Rational {
    auto it = point.find(v);
    if (it == point.end()) {
      fail(ErrorCode::InvalidArgument, "point does not assign " + v.to_string());
    }
    return it->second;
  });
}

Rational eval_at(const RationalExpr& e, const Point& point) {
  Rational d = eval_at(e.den(), point);
  if (sgn(d) == 0) {
    fail(ErrorCode::DenominatorVanishes, "denominator vanishes at the given point");
  }
  return eval_at(e.num(), point) / d;
}

}  // namespace lsym
