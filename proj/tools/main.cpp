// Command-line front end. Everything goes through the C API in lsym/lsym.h.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsym/lsym.h"

using json = nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  lsym_status status;
  ApiError(lsym_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

// Flag values holding JSON may be inline text, @path, or - for stdin.
json json_arg(const std::string& flag, const std::string& text) {
  std::string body = text;
  if (text == "-") {
    body.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError(flag + ": cannot read " + text.substr(1));
    body.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw UsageError(flag + ": invalid JSON: " + e.what());
  }
}

void check(lsym_status s) {
  if (s != LSYM_OK)
    throw ApiError(s, std::string(lsym_status_name(s)) + ": " + lsym_last_error());
}

std::string take(char* s) {
  std::string out(s);
  lsym_string_free(s);
  return out;
}

json call(lsym_status (*fn)(const char*, char**), const json& req) {
  char* out = nullptr;
  check(fn(req.dump().c_str(), &out));
  return json::parse(take(out));
}

// Owns an lsym_matpoly built from --matrix or --params.
struct MatPoly {
  lsym_matpoly* p = nullptr;
  ~MatPoly() { lsym_matpoly_free(p); }
};

void load_matpoly(MatPoly& mp, const std::string& matrix, const std::string& params) {
  if (matrix.empty() == params.empty()) throw UsageError("give exactly one of --matrix or --params");
  if (!matrix.empty())
    check(lsym_matpoly_from_json(json_arg("--matrix", matrix).dump().c_str(), &mp.p));
  else
    check(lsym_matpoly_whirl_product(json_arg("--params", params).dump().c_str(), &mp.p));
}

json vars_request(int n, int m, const std::string& values) {
  json v = {{"n", n}};
  if (!values.empty()) {
    v["values"] = json_arg("--values", values);
    if (m >= 0) v["m"] = m;
  } else {
    if (m < 0) throw UsageError("--m is required for symbolic variables");
    v["m"] = m;
  }
  return v;
}

std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

struct Output {
  std::string path;
  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text << '\n';
  }
  void emit(const json& j) const { emit(j.dump(2)); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop symmetric functions, the birational R-matrix and their tropical limits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lsym_version()));
  Output output;
  app.add_option("-o,--output", output.path, "Write the result to this file instead of stdout");

  // e
  int e_n = 0, e_m = -1, e_k = 0;
  long e_r = 1;
  bool e_symbolic = false, e_all = false, e_json = false;
  std::string e_values;
  auto* e = app.add_subcommand("e", "Loop elementary symmetric function e_k^(r)");
  e->add_option("--n", e_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  e->add_option("--m", e_m, "Number of sites")->check(CLI::NonNegativeNumber);
  e->add_option("--k", e_k, "Degree");
  e->add_option("--r", e_r, "Color (taken mod n)");
  auto* e_sym_flag = e->add_flag("--symbolic", e_symbolic, "Symbolic variables x[i]^(j) (default)");
  e->add_option("--values", e_values, "Numeric values as JSON rows, one per site")->excludes(e_sym_flag);
  e->add_flag("--all", e_all, "Every e_k^(r) with 1 <= k <= m, 1 <= r <= n");
  e->add_flag("--json", e_json, "Print the full JSON response");

  // schur
  int s_n = 0, s_m = -1;
  long s_r = 1;
  std::string s_shape, s_method = "tableaux", s_values;
  bool s_json = false;
  auto* schur = app.add_subcommand("schur", "Loop (skew) Schur function s_shape^(r)");
  schur->add_option("--n", s_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  schur->add_option("--m", s_m, "Number of sites")->check(CLI::NonNegativeNumber);
  schur->add_option("--shape", s_shape, "Partition [3,1] or {\"outer\":[..],\"inner\":[..]}")->required();
  schur->add_option("--r", s_r, "Color");
  schur->add_option("--method", s_method, "tableaux, jt, alternant or all")
      ->check(CLI::IsMember({"tableaux", "jt", "alternant", "all"}));
  schur->add_option("--values", s_values, "Numeric values as JSON rows");
  schur->add_flag("--json", s_json, "Print the full JSON response");

  // powersum
  int p_n = 0, p_m = -1, p_k = 1;
  std::string p_values;
  bool p_json = false;
  auto* powersum = app.add_subcommand("powersum", "Loop powersum p_k");
  powersum->add_option("--n", p_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  powersum->add_option("--m", p_m, "Number of sites")->check(CLI::NonNegativeNumber);
  powersum->add_option("--k", p_k, "Index")->required();
  powersum->add_option("--values", p_values, "Numeric values as JSON rows");
  powersum->add_flag("--json", p_json, "Print the full JSON response");

  // mn
  int mn_n = 0, mn_k = 1, mn_m = 0;
  std::string mn_lambda = "[]";
  bool mn_check = false;
  auto* mn = app.add_subcommand("mn", "Murnaghan-Nakayama expansion of p_k s_lambda");
  mn->add_option("--n", mn_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  mn->add_option("--k", mn_k, "Powersum index")->required();
  mn->add_option("--lambda", mn_lambda, "Partition as JSON");
  mn->add_option("--m", mn_m, "Sites; drops shapes with more than m rows and enables --check");
  mn->add_flag("--check", mn_check, "Verify the expansion symbolically for every color");

  // rmatrix
  int rm_n = 0, rm_m = -1;
  std::string rm_word, rm_values;
  auto* rmatrix = app.add_subcommand("rmatrix", "Apply a word in the generators s_k to the variable array");
  rmatrix->add_option("--n", rm_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  rmatrix->add_option("--m", rm_m, "Number of sites")->check(CLI::NonNegativeNumber);
  rmatrix->add_option("--word", rm_word, "Word such as \"s1 s2 s1\"")->required();
  rmatrix->add_option("--values", rm_values, "Numeric values as JSON rows");

  // hopf-check
  int h_n = 2, h_max_i = 3;
  bool h_unsigned = false;
  auto* hopf = app.add_subcommand("hopf-check", "Run the coproduct and antipode axiom suites");
  hopf->add_option("--n", h_n, "Number of colors")->check(CLI::PositiveNumber);
  hopf->add_option("--max-i", h_max_i, "Largest degree checked")->check(CLI::PositiveNumber);
  hopf->add_flag("--unsigned", h_unsigned, "Use the unsigned antipode convention");

  // trop
  int t_n = 0;
  std::string t_expr, t_values;
  auto* trop = app.add_subcommand("trop", "Tropicalize a subtraction-free rational expression");
  trop->add_option("--n", t_n, "Number of colors")->required()->check(CLI::PositiveNumber);
  trop->add_option("--expr", t_expr, "Expression in x[i]^(j)")->required();
  trop->add_option("--values", t_values, "Integer values as JSON rows; evaluates the min-plus form");

  // comb-r
  int c_n = 0;
  std::string c_b1, c_b2, c_method = "trop";
  auto* combr = app.add_subcommand("comb-r", "Combinatorial R-matrix on a pair of one-row tableaux");
  combr->add_option("--n", c_n, "Alphabet size")->required()->check(CLI::PositiveNumber);
  combr->add_option("--b1", c_b1, "First tableau: digit word or {\"counts\":[..]}")->required();
  combr->add_option("--b2", c_b2, "Second tableau")->required();
  combr->add_option("--method", c_method, "trop, jdt or both")->check(CLI::IsMember({"trop", "jdt", "both"}));

  // cocharge
  std::string cc_word, cc_rule = "left-keeps";
  bool cc_json = false;
  auto* cocharge = app.add_subcommand("cocharge", "Cocharge of a word");
  cocharge->add_option("word", cc_word, "Word as a digit string")->required();
  cocharge->add_option("--rule", cc_rule, "Index rule: left-keeps or left-raises")
      ->check(CLI::IsMember({"left-keeps", "left-raises"}));
  cocharge->add_flag("--json", cc_json, "Print the full JSON response");

  // energy
  std::string en_tableau, en_order = "as-given";
  int en_n = 0;
  auto* energy = app.add_subcommand("energy", "Energy of a tableau via the tropical loop Schur function");
  energy->add_option("--tableau", en_tableau, "Rows as JSON, e.g. [[1,1,2],[2]]")->required();
  energy->add_option("--n", en_n, "Number of colors (default: largest entry)");
  energy->add_option("--order", en_order, "Factor order: as-given or reversed")
      ->check(CLI::IsMember({"as-given", "reversed"}));

  // boxball
  std::string bb_state, bb_render = "ascii", bb_rule = "carrier";
  int bb_steps = 1;
  long bb_capacity = 0;
  auto* boxball = app.add_subcommand("boxball", "Evolve a box-ball state");
  boxball->add_option("--state", bb_state, "{\"boxes\":[..]}, {\"positions\":[..]} or a JSON string like \".oo..\"")
      ->required();
  boxball->add_option("--steps", bb_steps, "Number of steps")->check(CLI::NonNegativeNumber);
  boxball->add_option("--render", bb_render, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));
  boxball->add_option("--rule", bb_rule, "carrier or leftmost")->check(CLI::IsMember({"carrier", "leftmost"}));
  boxball->add_option("--capacity", bb_capacity, "Carrier capacity (0: unbounded)")->check(CLI::NonNegativeNumber);

  // factor
  std::string f_matrix, f_params;
  int f_m = 0, f_max_iter = 200;
  double f_tol = 1e-8;
  auto* factor = app.add_subcommand("factor", "Factor a matrix polynomial into m whirls");
  factor->add_option("--matrix", f_matrix, "{\"n\":N,\"coeffs\":[C0,C1,..]}");
  factor->add_option("--params", f_params, "Whirl parameters; the product is factored and orbit-matched");
  factor->add_option("--m", f_m, "Number of whirls")->required()->check(CLI::NonNegativeNumber);
  factor->add_option("--tol", f_tol, "Residual tolerance");
  factor->add_option("--max-iter", f_max_iter, "Polish iterations")->check(CLI::PositiveNumber);

  // tnn
  std::string tn_matrix, tn_params;
  int tn_window = 3, tn_order = 2;
  double tn_tol = 1e-9;
  bool tn_float = false;
  auto* tnn = app.add_subcommand("tnn", "Minor test of the block-Toeplitz window");
  tnn->add_option("--matrix", tn_matrix, "{\"n\":N,\"coeffs\":[C0,C1,..]}");
  tnn->add_option("--params", tn_params, "Whirl parameters");
  tnn->add_option("--window", tn_window, "Window size in blocks (1..6)");
  tnn->add_option("--order", tn_order, "Largest minor order (1..4)");
  tnn->add_option("--tol", tn_tol, "Tolerance for floating input");
  tnn->add_flag("--float", tn_float, "Use floating point even for exact input");

  // certify-schur
  std::string cs_matrix, cs_params, cs_e, cs_shapes;
  int cs_n = 0;
  std::vector<int> cs_box{3, 3};
  double cs_tol = 1e-9;
  auto* certify = app.add_subcommand("certify-schur", "Evaluate loop skew Schur functions at an e-table");
  certify->add_option("--matrix", cs_matrix, "Matrix polynomial; its e-table is extracted");
  certify->add_option("--params", cs_params, "Whirl parameters");
  certify->add_option("--e", cs_e, "e-table as [{\"k\":..,\"r\":..,\"value\":..},..]");
  certify->add_option("--n", cs_n, "Number of colors (with --e)");
  certify->add_option("--shapes", cs_shapes, "Shapes as a JSON array");
  certify->add_option("--box", cs_box, "All skew shapes inside a rows x cols box")->expected(2)->delimiter(',');
  certify->add_option("--tol", cs_tol, "Tolerance");

  // verify
  std::string v_suite = "all";
  std::uint64_t v_seed = 1;
  int v_points = 20;
  bool v_timings = false;
  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("--suite", v_suite, "Suite name or all");
  verify->add_option("--seed", v_seed, "Random seed");
  verify->add_option("--points", v_points, "Random points per check")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", v_timings, "Include wall-clock seconds (not deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*e) {
      json req = {{"vars", vars_request(e_n, e_m, e_values)}};
      if (e_all) {
        req["all"] = true;
      } else {
        if (e_k == 0) throw UsageError("--k is required unless --all is given");
        req["k"] = e_k;
        req["r"] = e_r;
      }
      const json res = call(lsym_loop_e, req);
      if (e_json || e_all) output.emit(res);
      else output.emit(plain(res["value"]));
    } else if (*schur) {
      json req = {{"vars", vars_request(s_n, s_m, s_values)},
                  {"shape", json_arg("--shape", s_shape)},
                  {"r", s_r},
                  {"method", s_method}};
      const json res = call(lsym_schur, req);
      if (s_json || s_method == "all") output.emit(res);
      else output.emit(plain(res["value"]));
    } else if (*powersum) {
      const json res = call(lsym_powersum, {{"vars", vars_request(p_n, p_m, p_values)}, {"k", p_k}});
      if (p_json) output.emit(res);
      else output.emit(plain(res["value"]));
    } else if (*mn) {
      output.emit(call(lsym_mn, {{"n", mn_n},
                                 {"k", mn_k},
                                 {"m", mn_m},
                                 {"lambda", json_arg("--lambda", mn_lambda)},
                                 {"check", mn_check}}));
    } else if (*rmatrix) {
      output.emit(call(lsym_rmatrix, {{"vars", vars_request(rm_n, rm_m, rm_values)}, {"word", rm_word}}));
    } else if (*hopf) {
      const json res = call(lsym_hopf_check, {{"n", h_n}, {"max_i", h_max_i}, {"signed", !h_unsigned}});
      output.emit(res);
      if (!res["passed"].get<bool>()) return kExitDomain;
    } else if (*trop) {
      json req = {{"n", t_n}, {"expr", t_expr}};
      if (!t_values.empty()) req["values"] = json_arg("--values", t_values);
      output.emit(call(lsym_trop, req));
    } else if (*combr) {
      // A bare digit word is accepted without JSON quoting.
      auto tableau = [](const std::string& flag, const std::string& s) {
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return json(s);
        return json_arg(flag, s);
      };
      output.emit(call(lsym_comb_r, {{"n", c_n},
                                     {"b1", tableau("--b1", c_b1)},
                                     {"b2", tableau("--b2", c_b2)},
                                     {"method", c_method}}));
    } else if (*cocharge) {
      const json res = call(lsym_cocharge, {{"word", cc_word}, {"rule", cc_rule}});
      if (cc_json) output.emit(res);
      else output.emit(plain(res["cocharge"]));
    } else if (*energy) {
      output.emit(call(lsym_energy,
                       {{"tableau", json_arg("--tableau", en_tableau)}, {"n", en_n}, {"order", en_order}}));
    } else if (*boxball) {
      json st = json_arg("--state", bb_state);
      const json res = call(lsym_boxball, {{"state", st},
                                           {"steps", bb_steps},
                                           {"rule", bb_rule},
                                           {"capacity", bb_capacity}});
      if (bb_render == "json") {
        output.emit(res);
      } else {
        std::string text;
        for (const auto& line : res["ascii"]) text += (text.empty() ? "" : "\n") + line.get<std::string>();
        output.emit(text);
      }
    } else if (*factor) {
      MatPoly mp;
      load_matpoly(mp, f_matrix, f_params);
      json opts = {{"m", f_m}, {"tol", f_tol}, {"max_iter", f_max_iter}};
      if (!f_params.empty()) opts["original"] = json_arg("--params", f_params);
      char* out = nullptr;
      check(lsym_factor(mp.p, opts.dump().c_str(), &out));
      output.emit(json::parse(take(out)));
    } else if (*tnn) {
      MatPoly mp;
      load_matpoly(mp, tn_matrix, tn_params);
      json opts = {{"window", tn_window}, {"order", tn_order}, {"tol", tn_tol}, {"exact", !tn_float}};
      char* out = nullptr;
      check(lsym_tnn(mp.p, opts.dump().c_str(), &out));
      const json res = json::parse(take(out));
      output.emit(res);
    } else if (*certify) {
      json req = {{"tol", cs_tol}, {"box", cs_box}};
      const int sources = !cs_matrix.empty() + !cs_params.empty() + !cs_e.empty();
      if (sources != 1) throw UsageError("give exactly one of --matrix, --params or --e");
      if (!cs_matrix.empty()) req["matrix"] = json_arg("--matrix", cs_matrix);
      if (!cs_params.empty()) req["params"] = json_arg("--params", cs_params);
      if (!cs_e.empty()) {
        if (cs_n <= 0) throw UsageError("--n is required with --e");
        req["e"] = json_arg("--e", cs_e);
        req["n"] = cs_n;
      }
      if (!cs_shapes.empty()) req["shapes"] = json_arg("--shapes", cs_shapes);
      output.emit(call(lsym_certify_schur, req));
    } else if (*verify) {
      json res;
      try {
        res = call(lsym_verify, {{"suite", v_suite}, {"seed", v_seed}, {"points", v_points}, {"timings", v_timings}});
      } catch (const ApiError& err) {
        // An unknown suite name is a usage error.
        if (err.status == LSYM_ERR_INVALID_ARGUMENT) throw UsageError(err.what());
        throw;
      }
      output.emit(res);
      if (!res["passed"].get<bool>()) return kExitDomain;
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return err.status == LSYM_ERR_PARSE ? kExitUsage : kExitDomain;
  }
  return 0;
}
