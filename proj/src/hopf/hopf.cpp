#include "hopf/hopf.hpp"

#include "common/error.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/schur.hpp"

namespace lsym::hopf {

EPoly E(int k, long r, int n) {
  if (k < 0) return EPoly();
  if (k == 0) return EPoly(1);
  return EPoly::var(VarId::make(k, r, n));
}

namespace {

std::string monomial_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += "*";
    out += "E(" + std::to_string(f.var.site) + "," + std::to_string(f.var.color) + ")";
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string term_string(const Rational& c, const std::string& mono, bool first) {
  std::string out;
  Rational a = abs(c);
  if (first)
    out = sgn(c) < 0 ? "-" : "";
  else
    out = sgn(c) < 0 ? " - " : " + ";
  if (mono == "1") return out + lsym::to_string(a);
  if (a != 1) out += lsym::to_string(a) + "*";
  return out + mono;
}

}  // namespace

int graded_degree(const Monomial& m) {
  int d = 0;
  for (const auto& f : m.factors()) d += static_cast<int>(f.var.site * f.exp);
  return d;
}

std::string to_string(const EPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    out += term_string(t.coef, monomial_string(t.mono), first);
    first = false;
  }
  return out;
}

ETensor ETensor::pure(const std::vector<EPoly>& factors) {
  ETensor out(factors.size());
  std::vector<Monomial> key(factors.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational c) {
    if (i == factors.size()) {
      out.add(key, c);
      return;
    }
    for (const auto& t : factors[i].terms()) {
      key[i] = t.mono;
      rec(i + 1, c * t.coef);
    }
  };
  rec(0, Rational(1));
  return out;
}

void ETensor::add(const Key& key, const Rational& c) {
  require(key.size() == arity_, "tensor arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ETensor& ETensor::operator+=(const ETensor& o) {
  require(o.arity_ == arity_, "tensor arity mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ETensor operator-(const ETensor& a, const ETensor& b) {
  ETensor out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, -c);
  return out;
}

ETensor operator*(const ETensor& a, const ETensor& b) {
  require(a.arity_ == b.arity_, "tensor arity mismatch");
  ETensor out(a.arity_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      ETensor::Key k(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i) k[i] = ka[i] * kb[i];
      out.add(k, ca * cb);
    }
  return out;
}

ETensor ETensor::flipped() const {
  ETensor out(arity_);
  for (const auto& [k, c] : terms_) out.add(Key(k.rbegin(), k.rend()), c);
  return out;
}

ETensor ETensor::expand_slot(std::size_t slot,
                             const std::function<ETensor(const EPoly&)>& f) const {
  require(slot < arity_, "slot out of range");
  ETensor out(arity_);
  bool sized = false;
  for (const auto& [k, c] : terms_) {
    ETensor img = f(EPoly::monomial(k[slot]));
    if (!sized) {
      out = ETensor(arity_ - 1 + img.arity());
      sized = true;
    }
    for (const auto& [ik, ic] : img.terms()) {
      Key nk(k.begin(), k.begin() + static_cast<long>(slot));
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + static_cast<long>(slot) + 1, k.end());
      out.add(nk, c * ic);
    }
  }
  return out;
}

ETensor ETensor::map_slot(std::size_t slot, const std::function<EPoly(const EPoly&)>& f) const {
  return expand_slot(slot, [&](const EPoly& p) { return ETensor::pure({f(p)}); });
}

EPoly ETensor::multiply_out() const {
  EPoly sum;
  for (const auto& [k, c] : terms_) {
    Monomial m;
    for (const auto& part : k) m = m * part;
    sum += EPoly::monomial(m, c);
  }
  return sum;
}

std::string ETensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) body += " (x) ";
      body += monomial_string(k[i]);
    }
    out += term_string(c, body == "1" ? "1 " : body, first);
    first = false;
  }
  return out;
}

namespace {

ETensor generator_coproduct(VarId g, int n) {
  const int i = static_cast<int>(g.site);
  const long k = g.color;
  ETensor out(2);
  for (int j = 0; j <= i; ++j) out += ETensor::pure({E(j, k, n), E(i - j, k + j, n)});
  return out;
}

}  // namespace

ETensor coproduct(const EPoly& p, int n) {
  ETensor out(2);
  for (const auto& t : p.terms()) {
    ETensor prod = ETensor::pure({EPoly(t.coef), EPoly(1)});
    for (const auto& f : t.mono.factors()) {
      ETensor g = generator_coproduct(f.var, n);
      for (std::uint32_t e = 0; e < f.exp; ++e) prod = prod * g;
    }
    out += prod;
  }
  return out;
}

Rational counit(const EPoly& p) { return p.constant_term(); }

namespace {

EPoly generator_antipode(VarId g, int n, bool signed_convention) {
  const int i = static_cast<int>(g.site);
  const long k = g.color;
  auto e_of = [n](int kk, long color) { return E(kk, color, n); };
  EPoly s = loop::jacobi_trudi<EPoly>(loop::SkewShape(loop::Partition({i})), k + i - 1, e_of);
  if (signed_convention && i % 2 == 1) s = -s;
  return s;
}

}  // namespace

EPoly antipode(const EPoly& p, int n, bool signed_convention) {
  return evaluate<EPoly>(p, [&](VarId g) { return generator_antipode(g, n, signed_convention); });
}

bool antipode_axiom_check(int i, long k, int n, bool signed_convention) {
  require(i >= 1, "axiom check needs i >= 1");
  EPoly sum;
  for (int j = 0; j <= i; ++j)
    sum += antipode(E(j, k, n), n, signed_convention) * E(i - j, k + j, n);
  return sum.is_zero();
}

SparsePoly to_loop_polynomial(const EPoly& p, const loop::LoopVarArray& vars) {
  std::map<VarId, SparsePoly> cache;
  return evaluate<SparsePoly>(p, [&](VarId g) {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, loop::loop_e(vars, g.site, g.color)).first;
    return it->second;
  });
}

std::vector<HopfReport> hopf_suites(int n, int max_i, bool signed_convention) {
  require(n >= 1 && max_i >= 1, "n and max_i must be positive");
  HopfReport coassoc{"coassociativity"}, count{"counit"}, grading{"grading"},
      anti{"antipode"};
  auto delta = [n](const EPoly& p) { return coproduct(p, n); };
  for (int i = 1; i <= max_i; ++i)
    for (int k = 1; k <= n; ++k) {
      const EPoly g = E(i, k, n);
      const ETensor d = coproduct(g, n);
      ++coassoc.checked;
      if (!(d.expand_slot(0, delta) == d.expand_slot(1, delta))) ++coassoc.failed;
      // (eps (x) id) Delta = id = (id (x) eps) Delta.
      for (std::size_t slot : {0u, 1u}) {
        ++count.checked;
        ETensor e = d.map_slot(slot, [](const EPoly& p) { return EPoly(counit(p)); });
        if (!(e.multiply_out() == g)) ++count.failed;
      }
      ++grading.checked;
      bool graded = true;
      const EPoly sg = antipode(g, n, signed_convention);
      for (const auto& t : sg.terms())
        if (graded_degree(t.mono) != i) graded = false;
      for (const auto& [key, c] : d.terms())
        if (graded_degree(key[0]) + graded_degree(key[1]) != i) graded = false;
      if (!graded) ++grading.failed;
      ++anti.checked;
      if (!antipode_axiom_check(i, k, n, signed_convention)) ++anti.failed;
    }
  return {coassoc, count, grading, anti};
}

}  // namespace lsym::hopf
