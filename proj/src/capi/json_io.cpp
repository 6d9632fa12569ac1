#include "capi/json_io.hpp"

#include "common/error.hpp"

namespace lsym::capi {

json parse_json(const char* text, bool allow_null) {
  if (text == nullptr) {
    if (allow_null) return json::object();
    fail(ErrorCode::InvalidArgument, "request is NULL");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& require_key(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::Parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string("missing key \"") + key + "\"");
  return *it;
}

Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::Parse, "expected an integer or a rational string, got " + j.dump());
}

json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

loop::Partition partition_of(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "partition must be an array");
  std::vector<int> parts = j.get<std::vector<int>>();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      fail(ErrorCode::InvalidArgument, "not a partition: " + j.dump());
  return loop::Partition(parts);
}

json to_json(const loop::Partition& p) { return p.parts(); }

loop::SkewShape skew_shape_of(const json& j) {
  if (j.is_array()) return loop::SkewShape(partition_of(j));
  const auto outer = partition_of(require_key(j, "outer"));
  auto it = j.find("inner");
  const auto inner = it == j.end() ? loop::Partition() : partition_of(*it);
  if (!outer.contains(inner)) fail(ErrorCode::InvalidArgument, "inner shape not contained in outer");
  return loop::SkewShape(outer, inner);
}

json to_json(const loop::SkewShape& s) {
  return {{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

loop::Tableau tableau_of(const json& j) {
  if (j.is_array()) {
    auto t = loop::Tableau::from_rows(j.get<std::vector<std::vector<int>>>());
    if (!t.is_semistandard()) fail(ErrorCode::InvalidArgument, "tableau is not semistandard");
    return t;
  }
  const auto rows = require_key(j, "rows").get<std::vector<std::vector<int>>>();
  auto it = j.find("inner");
  const auto inner = it == j.end() ? loop::Partition() : partition_of(*it);
  std::vector<int> outer;
  for (std::size_t i = 0; i < rows.size(); ++i)
    outer.push_back(inner.part(static_cast<int>(i) + 1) + static_cast<int>(rows[i].size()));
  loop::Tableau t(loop::SkewShape(loop::Partition(outer), inner), rows);
  if (!t.is_semistandard()) fail(ErrorCode::InvalidArgument, "tableau is not semistandard");
  return t;
}

json to_json(const loop::Tableau& t) {
  return {{"inner", to_json(t.shape().inner())}, {"rows", t.rows()}};
}

std::vector<std::vector<Rational>> rational_rows_of(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "values must be an array of rows");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::Parse, "values must be an array of rows");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_of(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<double>> real_rows_of(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "parameters must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    std::vector<double> r;
    for (const auto& v : row) r.push_back(v.is_string() ? rational_of(v).get_d() : v.get<double>());
    out.push_back(std::move(r));
  }
  return out;
}

loop::LoopVarArray var_array_of(const json& j) {
  const int n = require_key(j, "n").get<int>();
  require(n >= 1, "n must be positive");
  auto it = j.find("values");
  if (it != j.end() && !it->is_null()) {
    auto values = rational_rows_of(*it);
    if (j.contains("m"))
      require(j["m"].get<int>() == static_cast<int>(values.size()), "m does not match values");
    return loop::LoopVarArray::numeric(n, std::move(values));
  }
  const int m = require_key(j, "m").get<int>();
  require(m >= 0, "m must be nonnegative");
  return loop::LoopVarArray::symbolic(n, m);
}

crystal::Word word_of(const json& j) {
  crystal::Word w;
  if (j.is_string()) {
    for (char c : j.get<std::string>()) {
      if (c == ' ' || c == ',') continue;
      if (c < '1' || c > '9') fail(ErrorCode::Parse, "word letters must be digits 1-9");
      w.push_back(c - '0');
    }
    return w;
  }
  if (!j.is_array()) fail(ErrorCode::Parse, "word must be a digit string or an array");
  for (const auto& v : j) {
    const int x = v.get<int>();
    require(x >= 1, "word letters must be positive");
    w.push_back(x);
  }
  return w;
}

crystal::OneRowTableau one_row_of(const json& j, int n) {
  if (j.is_object()) {
    auto counts = require_key(j, "counts").get<std::vector<long>>();
    require(static_cast<int>(counts.size()) == n, "counts must have n entries");
    for (long c : counts) require(c >= 0, "counts must be nonnegative");
    return crystal::OneRowTableau{counts};
  }
  return crystal::OneRowTableau::from_word(word_of(j), n);
}

json to_json(const crystal::OneRowTableau& b) {
  std::string s;
  for (int x : b.word()) s += std::to_string(x);
  return {{"word", s}, {"counts", b.counts}};
}

boxball::BoxBallState state_of(const json& j) {
  if (j.is_string()) return boxball::BoxBallState::parse(j.get<std::string>());
  if (j.is_object() && j.contains("positions")) {
    const auto pos = j["positions"].get<std::vector<long>>();
    for (long p : pos) require(p >= 0, "positions must be nonnegative");
    return boxball::BoxBallState::from_positions(pos);
  }
  const auto boxes = require_key(j, "boxes").get<std::vector<int>>();
  for (int b : boxes) require(b == 0 || b == 1, "boxes must be 0 or 1");
  return boxball::BoxBallState(boxes);
}

json to_json(const boxball::BoxBallState& s) {
  return {{"boxes", s.boxes()}, {"positions", s.positions()}};
}

MatrixPolyData matrix_poly_of(const json& j) {
  const auto& coeffs = require_key(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) fail(ErrorCode::Parse, "coeffs must be a nonempty array");
  const int n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(coeffs[0].size());
  require(n >= 1, "n must be positive");
  bool exact = true;
  for (const auto& c : coeffs)
    for (const auto& row : c)
      for (const auto& v : row) exact = exact && (v.is_number_integer() || v.is_string());
  MatrixPolyData out{loop::MatrixPoly<double>(n), std::nullopt};
  if (exact) out.exact = loop::MatrixPoly<Rational>(n);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const auto& c = coeffs[d];
    if (!c.is_array() || static_cast<int>(c.size()) != n)
      fail(ErrorCode::Parse, "each coefficient must be an n x n array");
    for (int r = 0; r < n; ++r) {
      if (!c[r].is_array() || static_cast<int>(c[r].size()) != n)
        fail(ErrorCode::Parse, "each coefficient must be an n x n array");
      for (int col = 0; col < n; ++col) {
        const auto& v = c[r][col];
        if (exact) {
          const Rational q = rational_of(v);
          out.exact->set_coeff(r, col, static_cast<int>(d), q);
          out.real.set_coeff(r, col, static_cast<int>(d), q.get_d());
        } else {
          if (!v.is_number()) fail(ErrorCode::Parse, "matrix entries must be numbers");
          out.real.set_coeff(r, col, static_cast<int>(d), v.get<double>());
        }
      }
    }
  }
  return out;
}

json to_json(const loop::MatrixPoly<double>& p) {
  json coeffs = json::array();
  for (int d = 0; d <= std::max(0, p.degree()); ++d) {
    json c = json::array();
    for (int r = 0; r < p.n(); ++r) {
      json row = json::array();
      for (int col = 0; col < p.n(); ++col) row.push_back(p.coeff(r, col, d));
      c.push_back(row);
    }
    coeffs.push_back(c);
  }
  return {{"n", p.n()}, {"coeffs", coeffs}};
}

}  // namespace lsym::capi
