#include "loopsym/schur.hpp"

#include <functional>
#include <set>

#include "loopsym/loop_e.hpp"

namespace lsym::loop {

SparsePoly tableau_weight(const Tableau& t, long r, const LoopVarArray& vars) {
  SparsePoly w(1);
  for (const auto& [row, col] : t.shape().cells())
    w *= vars.entry(t.at(row, col), content(row, col) + r);
  return w;
}

SparsePoly loop_schur_tableaux(const SkewShape& shape, long r, const LoopVarArray& vars) {
  std::vector<SparsePoly::Term> terms;
  const auto cells = shape.cells();
  for_each_ssyt(shape, vars.m(), [&](const Tableau& t) {
    if (vars.is_symbolic()) {
      std::vector<Monomial::Factor> fs;
      for (const auto& [row, col] : cells)
        fs.push_back({vars.var(t.at(row, col), content(row, col) + r), 1});
      terms.push_back({Monomial::from_factors(std::move(fs)), Rational(1)});
    } else {
      terms.push_back({Monomial{}, tableau_weight(t, r, vars).constant_term()});
    }
  });
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly loop_schur_jt(const SkewShape& shape, long r, const LoopVarArray& vars) {
  std::map<std::pair<int, long>, SparsePoly> cache;
  auto e_of = [&](int k, long color) -> SparsePoly {
    if (k < 0) return SparsePoly();
    const long c = canonical_color(color, vars.n());
    auto it = cache.find({k, c});
    if (it != cache.end()) return it->second;
    return cache[{k, c}] = loop_e(vars, k, c);
  };
  return jacobi_trudi<SparsePoly>(shape, r, e_of);
}

int ribbon_height(const SkewShape& s) {
  int rows = 0;
  for (int i = 1; i <= s.outer().length(); ++i)
    if (s.outer().part(i) > s.inner().part(i)) ++rows;
  return rows == 0 ? 0 : rows - 1;
}

bool is_ribbon(const SkewShape& s) {
  const auto cells = s.cells();
  if (cells.empty()) return false;
  for (const auto& [i, j] : cells)
    if (s.contains(i + 1, j) && s.contains(i, j + 1) && s.contains(i + 1, j + 1))
      return false;
  // Connectivity through edge-adjacent cells.
  std::set<Cell> seen{cells.front()};
  std::vector<Cell> stack{cells.front()};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}})
      if (s.contains(nb.first, nb.second) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

std::vector<RibbonTerm> mn_expand(int n, int k, const Partition& lambda, int m) {
  require(n >= 1 && k >= 1, "n and k must be positive");
  const int add = k * n;
  const int max_rows = lambda.length() + add;
  std::vector<RibbonTerm> out;
  std::vector<int> parts;
  // Rows of mu chosen top to bottom, mu_i in [lambda_i, previous part].
  std::function<void(int, int, int)> rec = [&](int row, int left, int cap) {
    if (left == 0) {
      std::vector<int> full = parts;
      for (int i = row; i <= lambda.length(); ++i) full.push_back(lambda.part(i));
      Partition mu(full);
      SkewShape skew(mu, lambda);
      if (m > 0 && mu.length() > m) return;
      if (is_ribbon(skew)) out.push_back({mu, ribbon_height(skew) % 2 == 0 ? 1 : -1});
      return;
    }
    if (row > max_rows) return;
    const int lo = lambda.part(row);
    if (lo > cap) return;
    for (int v = std::min(cap, lo + left); v >= lo; --v) {
      if (v == 0) break;
      parts.push_back(v);
      rec(row + 1, left - (v - lo), v);
      parts.pop_back();
    }
  };
  rec(1, add, lambda.part(1) + add);
  return out;
}

}  // namespace lsym::loop
