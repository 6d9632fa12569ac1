#include "lsym/lsym.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "capi/json_io.hpp"
#include "common/error.hpp"
#include "crystal/trop.hpp"
#include "exact/parse.hpp"
#include "factorize/factorize.hpp"
#include "hopf/hopf.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/schur.hpp"
#include "rmatrix/rmatrix.hpp"
#include "verify/verify.hpp"

struct lsym_poly {
  lsym::SparsePoly p;
};
struct lsym_ratexpr {
  lsym::RationalExpr e;
};
struct lsym_matpoly {
  lsym::capi::MatrixPolyData data;
};

namespace lsym::capi {
namespace {

thread_local std::string g_last_error;

lsym_status status_of(ErrorCode c) {
  return static_cast<lsym_status>(static_cast<int>(c) + 1);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
lsym_status guarded(Fn&& fn) {
  try {
    fn();
    return LSYM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    g_last_error = std::string("malformed request: ") + e.what();
    return LSYM_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return LSYM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal error";
    return LSYM_ERR_INTERNAL;
  }
}

void check_out(const void* out) {
  if (out == nullptr) fail(ErrorCode::InvalidArgument, "output pointer is NULL");
}

// Wraps a JSON handler as a C entry point.
template <class Handler>
lsym_status json_call(const char* request, char** out, Handler&& h) {
  return guarded([&] {
    check_out(out);
    const json req = parse_json(request, true);
    const json res = h(req);
    *out = dup(res.dump());
  });
}

json value_json(const SparsePoly& p, bool symbolic) {
  if (symbolic) return p.to_string();
  return to_json(p.constant_term());
}

json value_json(const RationalExpr& e, bool symbolic) {
  const RationalExpr r = e.reduced();
  if (!symbolic && r.num().is_constant() && r.den().is_constant())
    return to_json(r.num().constant_term() / r.den().constant_term());
  return r.to_string();
}

std::vector<int> parse_perm_word(const json& j) {
  std::vector<int> w;
  if (j.is_array()) return j.get<std::vector<int>>();
  std::istringstream in(j.get<std::string>());
  std::string tok;
  while (in >> tok) {
    std::size_t i = (tok[0] == 's' || tok[0] == 'S') ? 1 : 0;
    if (i >= tok.size() || tok.find_first_not_of("0123456789", i) != std::string::npos)
      fail(ErrorCode::Parse, "bad word letter \"" + tok + "\"; expected s1, s2, ...");
    w.push_back(std::stoi(tok.substr(i)));
  }
  return w;
}

json schur_value(const loop::LoopVarArray& vars, const loop::SkewShape& shape, long r,
                 const std::string& method) {
  const bool sym = vars.is_symbolic();
  if (method == "tableaux") return value_json(loop::loop_schur_tableaux(shape, r, vars), sym);
  if (method == "jt") return value_json(loop::loop_schur_jt(shape, r, vars), sym);
  if (method == "alternant") {
    require(shape.is_straight(), "the alternant route needs a straight shape");
    // The alternant ratio at color c equals s^(c - m + 1).
    const long c = r + vars.m() - 1;
    return value_json(rmatrix::schur_via_alternants(vars, shape.outer(), c), sym);
  }
  fail(ErrorCode::InvalidArgument, "unknown method \"" + method + "\"; use tableaux, jt or alternant");
}

json hopf_reports(int n, int max_i, bool signed_convention) {
  json suites = json::array();
  bool ok = true;
  for (const auto& r : hopf::hopf_suites(n, max_i, signed_convention)) {
    suites.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}});
    ok = ok && r.failed == 0;
  }
  return {{"n", n}, {"max_i", max_i}, {"signed", signed_convention}, {"suites", suites}, {"passed", ok}};
}

std::vector<std::vector<long>> long_rows_of(const json& j) {
  return j.get<std::vector<std::vector<long>>>();
}

json cocharge_json(const crystal::Word& w, const std::string& rule) {
  if (rule == "left-keeps") return crystal::cocharge(w, crystal::IndexRule::LeftKeeps);
  if (rule == "left-raises") return crystal::cocharge(w, crystal::IndexRule::LeftRaises);
  fail(ErrorCode::InvalidArgument, "unknown rule \"" + rule + "\"; use left-keeps or left-raises");
}

std::string word_string(const crystal::Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

}  // namespace
}  // namespace lsym::capi

using namespace lsym;
using namespace lsym::capi;

extern "C" {

const char* lsym_version(void) { return "1.0.0"; }

const char* lsym_status_name(lsym_status status) {
  if (status == LSYM_OK) return "Ok";
  if (status == LSYM_ERR_INTERNAL) return "Internal";
  const int c = static_cast<int>(status) - 1;
  if (c >= 0 && c <= static_cast<int>(ErrorCode::DegenerateDenominator))
    return error_code_name(static_cast<ErrorCode>(c));
  return "Unknown";
}

const char* lsym_last_error(void) { return g_last_error.c_str(); }

void lsym_string_free(char* s) { std::free(s); }

lsym_status lsym_poly_loop_e(int n, int m, int k, long r, lsym_poly** out) {
  return guarded([&] {
    check_out(out);
    require(n >= 1 && m >= 0, "need n >= 1 and m >= 0");
    *out = new lsym_poly{loop::loop_e(loop::LoopVarArray::symbolic(n, m), k, r)};
  });
}

lsym_status lsym_poly_to_string(const lsym_poly* p, char** out) {
  return guarded([&] {
    check_out(out);
    require(p != nullptr, "polynomial is NULL");
    *out = dup(p->p.to_string());
  });
}

lsym_status lsym_poly_equal(const lsym_poly* a, const lsym_poly* b, int* out) {
  return guarded([&] {
    check_out(out);
    require(a && b, "polynomial is NULL");
    *out = a->p == b->p;
  });
}

void lsym_poly_free(lsym_poly* p) { delete p; }

lsym_status lsym_ratexpr_parse(const char* text, int n, lsym_ratexpr** out) {
  return guarded([&] {
    check_out(out);
    require(text != nullptr, "text is NULL");
    *out = new lsym_ratexpr{parse_expression(text, n)};
  });
}

lsym_status lsym_ratexpr_from_poly(const lsym_poly* p, lsym_ratexpr** out) {
  return guarded([&] {
    check_out(out);
    require(p != nullptr, "polynomial is NULL");
    *out = new lsym_ratexpr{RationalExpr(p->p)};
  });
}

lsym_status lsym_ratexpr_to_string(const lsym_ratexpr* e, char** out) {
  return guarded([&] {
    check_out(out);
    require(e != nullptr, "expression is NULL");
    *out = dup(e->e.to_string());
  });
}

lsym_status lsym_ratexpr_equal(const lsym_ratexpr* a, const lsym_ratexpr* b, int* out) {
  return guarded([&] {
    check_out(out);
    require(a && b, "expression is NULL");
    *out = rational_eq(a->e, b->e);
  });
}

lsym_status lsym_ratexpr_eval(const lsym_ratexpr* e, const char* values_json, char** out) {
  return guarded([&] {
    check_out(out);
    require(e != nullptr, "expression is NULL");
    const auto rows = rational_rows_of(parse_json(values_json));
    require(!rows.empty(), "values must be nonempty");
    const int n = static_cast<int>(rows[0].size());
    auto vars = loop::LoopVarArray::numeric(n, rows);
    *out = dup(to_string(eval_at(e->e, vars.as_point())));
  });
}

void lsym_ratexpr_free(lsym_ratexpr* e) { delete e; }

lsym_status lsym_matpoly_from_json(const char* text, lsym_matpoly** out) {
  return guarded([&] {
    check_out(out);
    *out = new lsym_matpoly{matrix_poly_of(parse_json(text))};
  });
}

lsym_status lsym_matpoly_whirl_product(const char* params_json, lsym_matpoly** out) {
  return guarded([&] {
    check_out(out);
    const json j = parse_json(params_json);
    if (!j.empty() && j[0].size() > 0 && j[0][0].is_number_float()) {
      const auto rows = real_rows_of(j);
      require(!rows.empty(), "need at least one whirl");
      *out = new lsym_matpoly{{loop::whirl_product(static_cast<int>(rows[0].size()), rows), std::nullopt}};
      return;
    }
    const auto rows = rational_rows_of(j);
    require(!rows.empty(), "need at least one whirl");
    const int n = static_cast<int>(rows[0].size());
    auto exact = loop::whirl_product(n, rows);
    auto real = exact.map<double>([](const Rational& q) { return q.get_d(); });
    *out = new lsym_matpoly{{real, exact}};
  });
}

lsym_status lsym_matpoly_to_json(const lsym_matpoly* p, char** out) {
  return guarded([&] {
    check_out(out);
    require(p != nullptr, "matrix polynomial is NULL");
    if (p->data.exact) {
      const auto& e = *p->data.exact;
      json coeffs = json::array();
      for (int d = 0; d <= std::max(0, e.degree()); ++d) {
        json c = json::array();
        for (int r = 0; r < e.n(); ++r) {
          json row = json::array();
          for (int col = 0; col < e.n(); ++col) row.push_back(to_json(e.coeff(r, col, d)));
          c.push_back(row);
        }
        coeffs.push_back(c);
      }
      *out = dup(json{{"n", e.n()}, {"coeffs", coeffs}}.dump());
      return;
    }
    *out = dup(to_json(p->data.real).dump());
  });
}

void lsym_matpoly_free(lsym_matpoly* p) { delete p; }

lsym_status lsym_factor(const lsym_matpoly* p, const char* options, char** out) {
  return guarded([&] {
    check_out(out);
    require(p != nullptr, "matrix polynomial is NULL");
    const json o = parse_json(options, true);
    const int m = require_key(o, "m").get<int>();
    const double tol = get_or(o, "tol", 1e-8);
    const int max_iter = get_or(o, "max_iter", 200);
    const auto r = factorize::whirl_factorize(p->data.real, m, tol, max_iter);
    json res = {{"params", r.params},
                {"residual", r.residual},
                {"converged", r.converged},
                {"iterations", r.iterations}};
    if (o.contains("original")) {
      const auto orig = real_rows_of(o["original"]);
      res["orbit_match"] = factorize::orbit_match(orig, r.params, get_or(o, "orbit_tol", 1e-6));
    }
    *out = dup(res.dump());
  });
}

lsym_status lsym_tnn(const lsym_matpoly* p, const char* options, char** out) {
  return guarded([&] {
    check_out(out);
    require(p != nullptr, "matrix polynomial is NULL");
    const json o = parse_json(options, true);
    const int w = get_or(o, "window", 3);
    const int order = get_or(o, "order", 2);
    const bool exact = get_or(o, "exact", true) && p->data.exact.has_value();
    const auto rep = exact ? factorize::tnn_check(*p->data.exact, w, order)
                           : factorize::tnn_check(p->data.real, w, order, get_or(o, "tol", 1e-9));
    json viol = json::array();
    for (const auto& v : rep.violations) {
      std::vector<int> rows, cols;
      for (int i : v.rows) rows.push_back(i + 1);
      for (int i : v.cols) cols.push_back(i + 1);
      viol.push_back({{"rows", rows}, {"cols", cols}, {"value", v.value}});
    }
    const int size = p->data.real.n() * w;
    json res = {{"window", rep.window},
                {"max_order", rep.max_order},
                {"exact", exact},
                {"minors_checked", rep.minors_checked},
                {"scope", "all minors of order <= " + std::to_string(rep.max_order) + " of the " +
                              std::to_string(size) + "x" + std::to_string(size) +
                              " window; a pass is a necessary condition only"},
                {"passed", rep.passed()},
                {"violations", viol}};
    *out = dup(res.dump());
  });
}

lsym_status lsym_loop_e(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto vars = var_array_of(require_key(req, "vars"));
    const bool sym = vars.is_symbolic();
    if (get_or(req, "all", false)) {
      json entries = json::array();
      for (int k = 1; k <= vars.m(); ++k)
        for (int r = 1; r <= vars.n(); ++r)
          entries.push_back({{"k", k}, {"r", r}, {"value", value_json(loop::loop_e(vars, k, r), sym)}});
      return json{{"n", vars.n()}, {"m", vars.m()}, {"entries", entries}};
    }
    const int k = require_key(req, "k").get<int>();
    const long r = require_key(req, "r").get<long>();
    return json{{"n", vars.n()}, {"m", vars.m()}, {"k", k}, {"r", r},
                {"value", value_json(loop::loop_e(vars, k, r), sym)}};
  });
}

lsym_status lsym_schur(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto vars = var_array_of(require_key(req, "vars"));
    const auto shape = skew_shape_of(require_key(req, "shape"));
    const long r = get_or(req, "r", 1L);
    const std::string method = get_or(req, "method", std::string("tableaux"));
    json res = {{"shape", to_json(shape)}, {"r", r}, {"method", method}};
    if (method == "all") {
      json values = json::object();
      for (const char* m : {"tableaux", "jt", "alternant"}) {
        if (std::string(m) == "alternant" && !shape.is_straight()) continue;
        values[m] = schur_value(vars, shape, r, m);
      }
      // Agreement is decided exactly, not on the output strings.
      bool agree = true;
      const auto base = parse_expression(loop::loop_schur_tableaux(shape, r, vars).to_string(), vars.n());
      for (auto& [name, v] : values.items()) {
        const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        agree = agree && rational_eq(parse_expression(s, vars.n()), base);
      }
      res["values"] = values;
      res["agree"] = agree;
      return res;
    }
    res["value"] = schur_value(vars, shape, r, method);
    if (method == "alternant") res["alternant_color"] = canonical_color(r + vars.m() - 1, vars.n());
    return res;
  });
}

lsym_status lsym_powersum(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto vars = var_array_of(require_key(req, "vars"));
    const int k = require_key(req, "k").get<int>();
    require(k >= 1, "k must be positive");
    return json{{"k", k}, {"value", value_json(loop::loop_powersum(vars, k), vars.is_symbolic())}};
  });
}

lsym_status lsym_mn(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const int n = require_key(req, "n").get<int>();
    const int k = require_key(req, "k").get<int>();
    const int m = get_or(req, "m", 0);
    require(n >= 1 && k >= 1 && m >= 0, "need n >= 1, k >= 1, m >= 0");
    const auto lam = partition_of(get_or(req, "lambda", json::array()));
    json terms = json::array();
    for (const auto& t : loop::mn_expand(n, k, lam, m))
      terms.push_back({{"mu", to_json(t.mu)},
                       {"sign", t.sign},
                       {"height", loop::ribbon_height(loop::SkewShape(t.mu, lam))}});
    json res = {{"n", n}, {"k", k}, {"m", m}, {"lambda", to_json(lam)}, {"terms", terms}};
    if (get_or(req, "check", false) && m > 0) {
      const auto vars = loop::LoopVarArray::symbolic(n, m);
      bool ok = true;
      for (long r = 1; r <= n; ++r) {
        SparsePoly rhs;
        for (const auto& t : loop::mn_expand(n, k, lam, m))
          rhs += loop::loop_schur_tableaux(loop::SkewShape(t.mu), r, vars) * t.sign;
        ok = ok && loop::loop_powersum(vars, k) * loop::loop_schur_tableaux(loop::SkewShape(lam), r, vars) == rhs;
      }
      res["holds"] = ok;
    }
    return res;
  });
}

lsym_status lsym_rmatrix(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto vars = var_array_of(require_key(req, "vars"));
    const auto word = parse_perm_word(get_or(req, "word", json("")));
    const auto sites = rmatrix::apply_word(vars, word);
    json arr = json::array();
    for (const auto& s : sites) {
      json row = json::array();
      for (const auto& v : s) row.push_back(value_json(v, vars.is_symbolic()));
      arr.push_back(row);
    }
    return json{{"n", vars.n()}, {"m", vars.m()}, {"word", word}, {"sites", arr}};
  });
}

lsym_status lsym_hopf_check(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const int n = get_or(req, "n", 2);
    const int max_i = get_or(req, "max_i", 3);
    require(n >= 1 && max_i >= 1, "need n >= 1 and max_i >= 1");
    return hopf_reports(n, max_i, get_or(req, "signed", true));
  });
}

lsym_status lsym_trop(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const int n = require_key(req, "n").get<int>();
    const auto expr = parse_expression(require_key(req, "expr").get<std::string>(), n);
    const auto t = crystal::tropicalize(expr);
    json res = {{"n", n}, {"trop", t.to_string()}};
    if (req.contains("values")) {
      const auto rows = long_rows_of(req["values"]);
      crystal::TropPoint p;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        require(static_cast<int>(rows[i].size()) == n, "each site needs n values");
        for (int c = 1; c <= n; ++c) p[VarId::make(static_cast<long>(i) + 1, c, n)] = rows[i][c - 1];
      }
      res["value"] = t.eval(p);
    }
    return res;
  });
}

lsym_status lsym_comb_r(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const int n = require_key(req, "n").get<int>();
    require(n >= 1, "n must be positive");
    const auto b1 = one_row_of(require_key(req, "b1"), n);
    const auto b2 = one_row_of(require_key(req, "b2"), n);
    const std::string method = get_or(req, "method", std::string("trop"));
    json res = {{"n", n}, {"b1", to_json(b1)}, {"b2", to_json(b2)}, {"method", method}};
    if (method == "trop" || method == "jdt") {
      const auto r = method == "trop" ? crystal::comb_R_tropical(b1, b2) : crystal::comb_R_jdt(b1, b2);
      res["c1"] = to_json(r.first);
      res["c2"] = to_json(r.second);
      return res;
    }
    if (method == "both") {
      const auto a = crystal::comb_R_tropical(b1, b2);
      const auto b = crystal::comb_R_jdt(b1, b2);
      res["c1"] = to_json(a.first);
      res["c2"] = to_json(a.second);
      res["agree"] = a == b;
      return res;
    }
    fail(ErrorCode::InvalidArgument, "unknown method \"" + method + "\"; use trop, jdt or both");
  });
}

lsym_status lsym_cocharge(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto w = word_of(require_key(req, "word"));
    const std::string rule = get_or(req, "rule", std::string("left-keeps"));
    return json{{"word", word_string(w)}, {"rule", rule}, {"cocharge", cocharge_json(w, rule)}};
  });
}

lsym_status lsym_energy(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    const auto t = tableau_of(require_key(req, "tableau"));
    require(t.shape().is_straight(), "energy needs a straight-shape tableau");
    const int n = get_or(req, "n", 0);
    const std::string order_s = get_or(req, "order", std::string("as-given"));
    crystal::FactorOrder order;
    if (order_s == "as-given") order = crystal::FactorOrder::AsGiven;
    else if (order_s == "reversed") order = crystal::FactorOrder::Reversed;
    else fail(ErrorCode::InvalidArgument, "unknown order \"" + order_s + "\"; use as-given or reversed");
    const auto e = crystal::energy(t, n, order);
    const auto w = crystal::reading_word(t.rows());
    const int m = static_cast<int>(t.weight().size());
    json mins = json::array();
    for (const auto& s : e.minimizers) mins.push_back(s.rows());
    json b = json::array();
    for (const auto& row : crystal::b_of_T(t, n > 0 ? n : m)) b.push_back(to_json(row));
    return json{{"tableau", to_json(t)},
                {"n", n > 0 ? n : m},
                {"order", order_s},
                {"energy", e.value},
                {"minimizers", mins},
                {"b", b},
                {"reading_word", word_string(w)},
                {"cocharge_left_keeps", crystal::cocharge(w, crystal::IndexRule::LeftKeeps)},
                {"cocharge_left_raises", crystal::cocharge(w, crystal::IndexRule::LeftRaises)}};
  });
}

lsym_status lsym_boxball(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    auto s = state_of(require_key(req, "state"));
    const int steps = get_or(req, "steps", 1);
    require(steps >= 0, "steps must be nonnegative");
    const std::string rule = get_or(req, "rule", std::string("carrier"));
    const long capacity = get_or(req, "capacity", 0L);
    require(rule == "carrier" || rule == "leftmost", "rule must be carrier or leftmost");
    require(capacity >= 0, "capacity must be nonnegative");
    require(rule == "carrier" || capacity == 0, "capacity applies to the carrier rule only");
    std::vector<boxball::BoxBallState> frames{s};
    for (int i = 0; i < steps; ++i)
      frames.push_back(rule == "carrier" ? boxball::evolve_carrier(frames.back(), capacity)
                                         : boxball::evolve_leftmost(frames.back()));
    long width = 0;
    for (const auto& f : frames) width = std::max(width, f.extent());
    json fj = json::array(), ascii = json::array();
    for (const auto& f : frames) {
      fj.push_back(to_json(f));
      ascii.push_back(f.render(width));
    }
    return json{{"rule", rule},
                {"steps", steps},
                {"frames", fj},
                {"ascii", ascii},
                {"final_positions", frames.back().positions()},
                {"solitons_initial", boxball::solitons(frames.front())},
                {"solitons_final", boxball::solitons(frames.back())}};
  });
}

lsym_status lsym_certify_schur(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    factorize::ETableReal e;
    int n = 0;
    if (req.contains("matrix") || req.contains("params")) {
      loop::MatrixPoly<double> p;
      if (req.contains("matrix")) {
        p = matrix_poly_of(req["matrix"]).real;
      } else {
        const auto rows = real_rows_of(req["params"]);
        require(!rows.empty(), "params must be nonempty");
        p = loop::whirl_product(static_cast<int>(rows[0].size()), rows);
      }
      n = p.n();
      e = factorize::e_table_of(p, get_or(req, "max_k", 8));
    } else {
      n = require_key(req, "n").get<int>();
      for (const auto& entry : require_key(req, "e"))
        e[{entry.at("k").get<int>(), static_cast<int>(canonical_color(entry.at("r").get<long>(), n))}] =
            entry.at("value").is_string() ? rational_of(entry.at("value")).get_d()
                                          : entry.at("value").get<double>();
    }
    std::vector<loop::SkewShape> shapes;
    if (req.contains("shapes")) {
      for (const auto& s : req["shapes"]) shapes.push_back(skew_shape_of(s));
    } else {
      const auto box = get_or(req, "box", std::vector<int>{3, 3});
      require(box.size() == 2 && box[0] >= 0 && box[1] >= 0, "box must be [rows, cols]");
      shapes = loop::SkewShape::all_within(box[0], box[1]);
    }
    const auto rep = factorize::skew_schur_certificate(e, n, shapes, get_or(req, "tol", 1e-9));
    json neg = json::array();
    for (const auto& v : rep.negatives)
      neg.push_back({{"shape", to_json(v.shape)}, {"r", v.r}, {"value", v.value}});
    return json{{"n", n}, {"evaluated", rep.evaluated}, {"passed", rep.passed()}, {"negatives", neg}};
  });
}

lsym_status lsym_verify(const char* request, char** out) {
  return json_call(request, out, [](const json& req) {
    verify::Options o;
    o.seed = get_or(req, "seed", std::uint64_t{1});
    o.points = get_or(req, "points", 20);
    const bool timings = get_or(req, "timings", false);
    const std::string suite = get_or(req, "suite", std::string("all"));
    std::vector<std::string> names;
    if (suite == "all") names = verify::suite_names();
    else names = {suite};
    json suites = json::array();
    bool ok = true;
    for (const auto& name : names) {
      const auto rep = verify::run_suite(name, o);
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"passed", c.passed()},
                          {"detail", c.detail}});
      json sj = {{"name", rep.name}, {"passed", rep.passed()}, {"checks", checks}};
      if (timings) sj["seconds"] = rep.seconds;
      suites.push_back(sj);
      ok = ok && rep.passed();
    }
    return json{{"seed", o.seed}, {"points", o.points}, {"suites", suites}, {"passed", ok}};
  });
}

}  // extern "C"
