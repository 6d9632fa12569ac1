#include "loopsym/loop_e.hpp"

#include <vector>

namespace lsym::loop {

SparsePoly loop_e(const LoopVarArray& vars, int k, long r) {
  if (k < 0 || k > vars.m()) return SparsePoly();
  if (k == 0) return SparsePoly(1);
  // f[j] = sum over index sets of size j within the sites seen so far.
  std::vector<SparsePoly> f(k + 1);
  f[0] = SparsePoly(1);
  for (int i = 1; i <= vars.m(); ++i)
    for (int j = std::min(i, k); j >= 1; --j) {
      if (f[j - 1].is_zero()) continue;
      f[j] += f[j - 1] * vars.entry(i, r + j - 1);
    }
  return f[k];
}

SparsePoly loop_powersum(const LoopVarArray& vars, int k) {
  require(k >= 1, "powersum degree must be positive");
  SparsePoly sum;
  for (int i = 1; i <= vars.m(); ++i) {
    SparsePoly prod(1);
    for (int c = 1; c <= vars.n(); ++c) prod *= vars.entry(i, c);
    sum += prod.pow(static_cast<unsigned>(k));
  }
  return sum;
}

MatrixPoly<SparsePoly> whirl_product(const LoopVarArray& vars) {
  std::vector<std::vector<SparsePoly>> sites;
  for (int i = 1; i <= vars.m(); ++i) {
    std::vector<SparsePoly> col;
    for (int c = 1; c <= vars.n(); ++c) col.push_back(vars.entry(i, c));
    sites.push_back(std::move(col));
  }
  return whirl_product<SparsePoly>(vars.n(), sites);
}

ETable<SparsePoly> extract_e(const MatrixPoly<SparsePoly>& p, int max_k) {
  return extract_e(
      p, max_k, [](const SparsePoly& s) { return s.is_zero(); },
      [](const SparsePoly& s) { return s == SparsePoly(1); });
}

SparsePoly boundary_measurement(const LoopVarArray& vars, int from_wire, int to_wire,
                                int wraps) {
  const int n = vars.n();
  require(from_wire >= 1 && from_wire <= n && to_wire >= 1 && to_wire <= n,
          "wire out of range");
  require(wraps >= 0, "wraps must be nonnegative");
  // State: current wire and number of passes through the corner (t-degree).
  const int max_t = vars.m() / n + 2;
  auto idx = [&](int wire, int tdeg) { return (wire - 1) * (max_t + 1) + tdeg; };
  std::vector<SparsePoly> state(static_cast<std::size_t>(n) * (max_t + 1));
  state[idx(from_wire, 0)] = SparsePoly(1);
  for (int i = 1; i <= vars.m(); ++i) {
    std::vector<SparsePoly> next = state;  // staying on the wire has weight 1
    for (int w = 1; w <= n; ++w)
      for (int d = 0; d <= max_t; ++d) {
        const auto& cur = state[idx(w, d)];
        if (cur.is_zero()) continue;
        const int w2 = (w == n) ? 1 : w + 1;
        const int d2 = (w == n) ? d + 1 : d;
        if (d2 > max_t) continue;
        next[idx(w2, d2)] += cur * vars.entry(i, w);
      }
    state = std::move(next);
  }
  const int tdeg = wraps - (to_wire > from_wire ? 1 : 0);
  if (tdeg < 0 || tdeg > max_t) return SparsePoly();
  return state[idx(to_wire, tdeg)];
}

SparsePoly cycle_measurement(const LoopVarArray& vars, int wraps) {
  require(wraps >= 1, "cycle measurement needs at least one wrap");
  SparsePoly sum;
  for (int i = 1; i <= vars.m(); ++i) {
    SparsePoly walk(1);
    for (int step = 0; step < wraps * vars.n(); ++step) walk *= vars.entry(i, step + 1);
    sum += walk;
  }
  return sum;
}

}  // namespace lsym::loop
