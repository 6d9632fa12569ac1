#include "verify/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "boxball/boxball.hpp"
#include "common/error.hpp"
#include "crystal/crystal.hpp"
#include "factorize/factorize.hpp"
#include "hopf/hopf.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/schur.hpp"
#include "loopsym/tableau.hpp"
#include "rmatrix/rmatrix.hpp"

namespace lsym::verify {

bool SuiteReport::passed() const noexcept {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

namespace {

using loop::LoopVarArray;
using loop::Partition;
using loop::SkewShape;
using rmatrix::SiteArray;

// Counts cases and keeps the first few failure descriptions.
class Tally {
 public:
  explicit Tally(std::string name) { check_.name = std::move(name); }
  void record(bool ok, const std::function<std::string()>& what = {}) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures < 3 && what) {
      if (!check_.detail.empty()) check_.detail += "; ";
      check_.detail += what();
    }
    ++check_.failures;
  }
  void note(const std::string& s) {
    if (!check_.detail.empty()) check_.detail += "; ";
    check_.detail += s;
  }
  Check done() const { return check_; }

 private:
  Check check_;
};

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (int k : w) s += (s.empty() ? "s" : " s") + std::to_string(k);
  return s.empty() ? "id" : s;
}

bool arrays_eq(const SiteArray<RationalExpr>& a, const SiteArray<RationalExpr>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a[i].size(); ++c)
      if (!rational_eq(a[i][c], b[i][c])) return false;
  return true;
}

SiteArray<Rational> random_sites(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<long> d(1, 1000000);
  SiteArray<Rational> s(m, rmatrix::Site<Rational>(n));
  for (auto& site : s)
    for (auto& v : site) v = Rational(d(rng));
  return s;
}

Point random_point(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<long> d(1, 1000);
  Point p;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) p[VarId::make(i, j, n)] = Rational(d(rng));
  return p;
}

int exact_rank(std::vector<std::vector<Rational>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// --- suites ---------------------------------------------------------------

std::vector<Check> suite_braid(const Options& o) {
  Tally inv("involution, symbolic n <= 2, m = 3");
  Tally braid("braid, symbolic n <= 2, m = 3");
  for (int n = 1; n <= 2; ++n) {
    auto vars = LoopVarArray::symbolic(n, 3);
    const auto base = rmatrix::symbolic_sites(vars);
    for (int k = 1; k <= 2; ++k)
      inv.record(arrays_eq(rmatrix::apply_word(vars, {k, k}), base),
                 [&] { return "n=" + std::to_string(n) + " s" + std::to_string(k) + "^2"; });
    braid.record(arrays_eq(rmatrix::apply_word(vars, {1, 2, 1}), rmatrix::apply_word(vars, {2, 1, 2})),
                 [&] { return "n=" + std::to_string(n); });
  }
  Tally rnd("involution and braid, exact random points n = 3, 4, m = 4");
  std::mt19937_64 rng(o.seed);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> relations = {
      {{1, 1}, {}}, {{2, 2}, {}}, {{3, 3}, {}},
      {{1, 2, 1}, {2, 1, 2}}, {{2, 3, 2}, {3, 2, 3}}, {{1, 3}, {3, 1}}};
  for (int n = 3; n <= 4; ++n)
    for (int pt = 0; pt < o.points; ++pt) {
      const auto base = random_sites(rng, n, 4);
      for (const auto& [lhs, rhs] : relations)
        rnd.record(rmatrix::apply_word(base, lhs) == rmatrix::apply_word(base, rhs), [&] {
          return "n=" + std::to_string(n) + " " + word_str(lhs) + " vs " + word_str(rhs);
        });
    }
  return {inv.done(), braid.done(), rnd.done()};
}

std::vector<Check> suite_whirl_commutation(const Options& o) {
  Tally sym("symbolic n <= 2, m <= 3");
  Tally rnd("exact random points n = 3, m = 3");
  const std::vector<std::vector<int>> words2 = {{1}};
  const std::vector<std::vector<int>> words3 = {{1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
  for (int n = 1; n <= 2; ++n)
    for (int m = 2; m <= 3; ++m)
      for (const auto& w : m == 2 ? words2 : words3) {
        const auto r = rmatrix::verify_whirl_commutation(n, m, w, o.seed, o.points);
        sym.record(r.holds && r.symbolic, [&] { return "n=" + std::to_string(n) + " " + word_str(w); });
      }
  for (const auto& w : words3) {
    const auto r = rmatrix::verify_whirl_commutation(3, 3, w, o.seed, o.points);
    rnd.record(r.holds && r.points == o.points, [&] { return word_str(w); });
  }
  return {sym.done(), rnd.done()};
}

std::vector<Check> suite_invariance(const Options& o) {
  Tally inv("e_k^(r) invariant under every adjacent swap, symbolic n, m <= 3");
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      for (int j = 1; j < m; ++j) {
        const auto b = rmatrix::swap_bindings(vars, j);
        for (int k = 1; k <= m; ++k)
          for (int r = 1; r <= n; ++r) {
            const auto e = loop::loop_e(vars, k, r);
            inv.record(rational_eq(substitute(e, b), RationalExpr(e)), [&] {
              return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " s" +
                     std::to_string(j) + " e_" + std::to_string(k) + "^(" + std::to_string(r) + ")";
            });
          }
      }
    }
  Tally jac("Jacobian of the e_k^(r) has full rank nm at a random point, n, m <= 3");
  std::mt19937_64 rng(o.seed);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      const Point pt = random_point(rng, n, m);
      std::vector<std::vector<Rational>> rows;
      for (int k = 1; k <= m; ++k)
        for (int r = 1; r <= n; ++r) {
          const auto g = loop::loop_e(vars, k, r);
          std::vector<Rational> row;
          for (int i = 1; i <= m; ++i)
            for (int c = 1; c <= n; ++c) row.push_back(eval_at(partial_derivative(g, vars.var(i, c)), pt));
          rows.push_back(std::move(row));
        }
      const int rank = exact_rank(rows);
      jac.record(rank == n * m, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " rank " + std::to_string(rank);
      });
    }
  return {inv.done(), jac.done()};
}

std::vector<Check> suite_jacobi_trudi(const Options&) {
  Tally t("tableau sum equals Jacobi-Trudi, skew shapes in 3x3, n, m <= 3");
  const auto shapes = SkewShape::all_within(3, 3);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto vars = LoopVarArray::symbolic(n, m);
      for (const auto& sh : shapes)
        for (int r = 1; r <= n; ++r)
          t.record(loop::loop_schur_tableaux(sh, r, vars) == loop::loop_schur_jt(sh, r, vars), [&] {
            return sh.to_string() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
          });
    }
  return {t.done()};
}

std::vector<Check> suite_murnaghan_nakayama(const Options&) {
  Tally t("p~_k s_lambda^(r) = sum (-1)^het s_mu^(r), kn <= 6, lambda in 2x2, n, m <= 3");
  std::vector<Partition> lams;
  for (const auto& sh : SkewShape::all_within(2, 2))
    if (sh.is_straight()) lams.push_back(sh.outer());
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k * n <= 6; ++k)
      for (int m = 1; m <= 3; ++m) {
        auto vars = LoopVarArray::symbolic(n, m);
        const auto pk = loop::loop_powersum(vars, k);
        for (const auto& lam : lams)
          for (int r = 1; r <= n; ++r) {
            SparsePoly rhs;
            for (const auto& term : loop::mn_expand(n, k, lam, m))
              rhs += loop::loop_schur_tableaux(SkewShape(term.mu), r, vars) * term.sign;
            t.record(pk * loop::loop_schur_tableaux(SkewShape(lam), r, vars) == rhs, [&] {
              return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lambda=" + lam.to_string();
            });
          }
      }
  return {t.done()};
}

std::vector<Check> suite_hopf(const Options&) {
  std::vector<Check> out;
  std::map<std::string, Tally> by_name;
  std::vector<std::string> order;
  for (int n = 1; n <= 3; ++n)
    for (const auto& rep : hopf::hopf_suites(n, 3, true)) {
      const std::string name = rep.name + ", generators i <= 3, n <= 3";
      if (!by_name.count(name)) {
        by_name.emplace(name, Tally(name));
        order.push_back(name);
      }
      auto& t = by_name.at(name);
      for (int i = 0; i < rep.checked; ++i)
        t.record(i >= rep.failed, [&] { return "n=" + std::to_string(n); });
    }
  for (const auto& name : order) out.push_back(by_name.at(name).done());
  // i = 1: the signed antipode passes and the unsigned one fails.
  Tally sign("antipode sign pinned at i = 1");
  for (int n = 1; n <= 3; ++n)
    for (long k = 1; k <= n; ++k)
      sign.record(hopf::antipode_axiom_check(1, k, n, true) &&
                      !hopf::antipode_axiom_check(1, k, n, false),
                  [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
  out.push_back(sign.done());
  return out;
}

std::vector<crystal::OneRowTableau> all_rows(int n, int max_len) {
  std::vector<crystal::OneRowTableau> out;
  std::vector<long> c(n, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == n - 1) {
      for (long last = 0; last <= left; ++last) {
        c[i] = last;
        out.push_back(crystal::OneRowTableau{c});
      }
      return;
    }
    for (long k = 0; k <= left; ++k) {
      c[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, max_len);
  return out;
}

std::vector<Check> suite_comb_r(const Options&) {
  Tally t("tropical swap equals jeu de taquin, lengths <= 4, n <= 3");
  Tally inv("R is an involution, lengths <= 4, n <= 3");
  for (int n = 1; n <= 3; ++n) {
    const auto rows = all_rows(n, 4);
    for (const auto& b1 : rows)
      for (const auto& b2 : rows) {
        const auto a = crystal::comb_R_tropical(b1, b2);
        const auto b = crystal::comb_R_jdt(b1, b2);
        t.record(a == b, [&] { return b1.to_string() + " (x) " + b2.to_string(); });
        inv.record(crystal::comb_R_tropical(a.first, a.second) == std::make_pair(b1, b2));
      }
  }
  return {t.done(), inv.done()};
}

std::vector<loop::Tableau> highest_weight_tableaux(int max_cells, int max_entry) {
  std::vector<loop::Tableau> out;
  for (int cells = 1; cells <= max_cells; ++cells)
    for (const auto& lam : loop::partitions_of(cells, max_entry))
      loop::for_each_ssyt(SkewShape(lam), max_entry, [&](const loop::Tableau& t) {
        const auto w = t.weight();
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] == 0 || (i > 0 && w[i] > w[i - 1])) return;
        out.push_back(t);
      });
  return out;
}

std::string rows_str(const loop::Tableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    s += s.empty() ? "[" : ",[";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    s += "]";
  }
  return s;
}

std::vector<Check> suite_energy_cocharge(const Options&) {
  Tally literal("energy (literal factor order) = cocharge (left-keeps index rule), <= 12 cells, n <= 3");
  Tally fixed("energy (reversed factor order) = Lascoux-Schutzenberger cocharge, <= 12 cells, n <= 3");
  for (const auto& t : highest_weight_tableaux(12, 3)) {
    const auto w = crystal::reading_word(t.rows());
    const int m = static_cast<int>(t.weight().size());
    const long cc_keeps = crystal::cocharge(w);
    const long cc_ls = crystal::cocharge(w, crystal::IndexRule::LeftRaises);
    for (int n = std::max(m, 1); n <= 3; ++n) {
      if (m >= 2 && n >= m + 2) continue;  // no tableau of the staircase shape
      const long e_lit = crystal::energy(t, n).value;
      literal.record(e_lit == cc_keeps, [&] {
        return rows_str(t) + " n=" + std::to_string(n) + ": energy " + std::to_string(e_lit) +
               ", cocharge " + std::to_string(cc_keeps);
      });
      const long e_rev = crystal::energy(t, n, crystal::FactorOrder::Reversed).value;
      fixed.record(e_rev == cc_ls, [&] {
        return rows_str(t) + " n=" + std::to_string(n) + ": energy " + std::to_string(e_rev) +
               ", cocharge " + std::to_string(cc_ls);
      });
    }
  }
  return {literal.done(), fixed.done()};
}

boxball::BoxBallState random_state(std::mt19937_64& rng, int boxes, int max_balls) {
  std::vector<long> pos(boxes);
  for (int i = 0; i < boxes; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(std::uniform_int_distribution<int>(0, std::min(boxes, max_balls))(rng));
  std::sort(pos.begin(), pos.end());
  return boxball::BoxBallState::from_positions(pos);
}

std::vector<Check> suite_boxball(const Options& o) {
  using namespace boxball;
  Tally ex("leftmost-ball rule = carrier rule, all states of <= 8 boxes");
  for (int len = 0; len <= 8; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> boxes(len);
      for (int i = 0; i < len; ++i) boxes[i] = (mask >> i) & 1;
      const BoxBallState s(boxes);
      ex.record(evolve_leftmost(s) == evolve_carrier(s), [&] { return s.render(len); });
    }
  std::mt19937_64 rng(o.seed);
  Tally rnd("leftmost-ball rule = carrier rule, 500 random states of 60 boxes");
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = random_state(rng, 60, 20);
    rnd.record(evolve_leftmost(s) == evolve_carrier(s), [&] { return s.render(s.extent()); });
  }
  const auto q = calibrate_color_shift(6);
  Tally cons("carrier-inclusive tropical e_k^(r) conserved at every step, 500 random trajectories");
  if (!q) {
    cons.record(false, [] { return "no color shift calibrates"; });
  } else {
    cons.note("calibrated color shift q = " + std::to_string(*q));
    for (int trial = 0; trial < 500; ++trial) {
      auto s = random_state(rng, 16, 7);
      const int steps = 5;
      const long window = s.extent() + (steps + 1) * (s.ball_count() + 1);
      for (int t = 0; t < steps; ++t) {
        const auto next = evolve_carrier(s, 0, window);
        bool ok = true;
        for (int k = 1; k <= window + 1 && ok; ++k)
          for (long r = 1; r <= 2 && ok; ++r)
            ok = carrier_invariant(s, window, k, r, CarrierSide::Left) ==
                 carrier_invariant(next, window, k, r + *q, CarrierSide::Right);
        cons.record(ok, [&] { return s.render(s.extent()) + " step " + std::to_string(t); });
        s = next;
      }
    }
  }
  Tally sol("soliton multiset {3,1} preserved through the collision");
  auto s = BoxBallState::from_positions({1, 2, 3, 8});
  const auto before = solitons(s);
  std::vector<long> sorted_before = before;
  std::sort(sorted_before.begin(), sorted_before.end());
  for (int t = 0; t < 12; ++t) s = evolve_carrier(s);
  auto after = solitons(s);
  std::sort(after.begin(), after.end());
  sol.record(sorted_before == std::vector<long>{1, 3} && after == sorted_before);
  return {ex.done(), rnd.done(), cons.done(), sol.done()};
}

std::vector<Check> suite_factorize(const Options& o) {
  Tally rt("whirl_factorize round trip, residual <= 1e-8, 100 random products n, m <= 3");
  Tally orbit("recovered parameters orbit-match the originals (>= 95 of 100)");
  int matched = 0, total = 0;
  for (const auto& params : random_whirl_arrays(o.seed, 100)) {
    const int n = static_cast<int>(params[0].size());
    const int m = static_cast<int>(params.size());
    const auto p = loop::whirl_product(n, params);
    ++total;
    try {
      const auto r = factorize::whirl_factorize(p, m);
      const double res = factorize::max_abs_diff(loop::whirl_product(n, r.params), p);
      rt.record(r.converged && res <= 1e-8, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " residual " + std::to_string(res);
      });
      matched += factorize::orbit_match(params, r.params, 1e-6);
    } catch (const Error& e) {
      rt.record(false, [&] { return std::string(error_code_name(e.code())) + ": " + e.what(); });
    }
  }
  orbit.record(matched >= 95);
  orbit.note(std::to_string(matched) + " of " + std::to_string(total) + " matched");
  Tally quad("n = 1 quadratics: (1+t)(1+2t) gives {1,2}; 1+t+t^2 has no real factorization");
  {
    loop::MatrixPoly<double> p(1);
    p.set_coeff(0, 0, 0, 1);
    p.set_coeff(0, 0, 1, 3);
    p.set_coeff(0, 0, 2, 2);
    const auto r = factorize::whirl_factorize(p, 2);
    double a = r.params[0][0], b = r.params[1][0];
    if (a > b) std::swap(a, b);
    quad.record(std::abs(a - 1) < 1e-12 && std::abs(b - 2) < 1e-12);
    p.set_coeff(0, 0, 1, 1);
    p.set_coeff(0, 0, 2, 1);
    bool raised = false;
    try {
      factorize::whirl_factorize(p, 2);
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::NoRealFactorization;
    }
    quad.record(raised);
  }
  return {rt.done(), orbit.done(), quad.done()};
}

std::vector<Check> suite_tnn(const Options& o) {
  Tally minors("tnn_check (window 5, order 3) passes on 100 nonnegative whirl products");
  Tally cert("skew_schur_certificate (shapes in 3x3) passes on the same products");
  const auto shapes = SkewShape::all_within(3, 3);
  for (const auto& params : random_whirl_arrays(o.seed, 100)) {
    const int n = static_cast<int>(params[0].size());
    const auto p = loop::whirl_product(n, params);
    const auto rep = factorize::tnn_check(p, 5, 3);
    minors.record(rep.passed(), [&] {
      return "n=" + std::to_string(n) + " m=" + std::to_string(params.size()) + ": " +
             std::to_string(rep.violations.size()) + " negative minors";
    });
    const auto c = factorize::skew_schur_certificate(factorize::e_table_of(p, 6), n, shapes);
    cert.record(c.passed(), [&] { return std::to_string(c.negatives.size()) + " negative values"; });
  }
  Tally neg("1 - t and 1 + t + t^2 produce violations");
  auto scalar = [](std::vector<double> c) {
    loop::MatrixPoly<double> p(1);
    for (std::size_t d = 0; d < c.size(); ++d) p.set_coeff(0, 0, static_cast<int>(d), c[d]);
    return p;
  };
  neg.record(!factorize::tnn_check(scalar({1, -1}), 5, 3).passed());
  neg.record(!factorize::tnn_check(scalar({1, 1, 1}), 5, 3).passed());
  return {minors.done(), cert.done(), neg.done()};
}

using SuiteFn = std::vector<Check> (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"braid", suite_braid},
      {"whirl-commutation", suite_whirl_commutation},
      {"invariance", suite_invariance},
      {"jacobi-trudi", suite_jacobi_trudi},
      {"murnaghan-nakayama", suite_murnaghan_nakayama},
      {"hopf", suite_hopf},
      {"comb-r", suite_comb_r},
      {"energy-cocharge", suite_energy_cocharge},
      {"boxball", suite_boxball},
      {"factorize", suite_factorize},
      {"tnn", suite_tnn},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const Options& opts) {
  require(opts.points >= 1, "points must be positive");
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteReport rep;
    rep.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    rep.checks = fn(opts);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

std::vector<std::vector<std::vector<double>>> random_whirl_arrays(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<std::vector<double>>> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + i % 3;
    const int m = 1 + (i / 3) % 3;
    std::vector<std::vector<double>> ps(m, std::vector<double>(n));
    for (auto& site : ps)
      for (auto& v : site) v = 1.0 - u(rng);
    out.push_back(std::move(ps));
  }
  return out;
}

}  // namespace lsym::verify
