#pragma once

// JSON forms of the core types, shared by the C entry points.

#include <json.hpp>

#include <optional>

#include "boxball/boxball.hpp"
#include "crystal/crystal.hpp"
#include "loopsym/matrix_poly.hpp"
#include "loopsym/tableau.hpp"
#include "loopsym/var_array.hpp"

namespace lsym::capi {

using nlohmann::json;

json parse_json(const char* text, bool allow_null = false);

Rational rational_of(const json& j);
json to_json(const Rational& q);

loop::Partition partition_of(const json& j);
json to_json(const loop::Partition& p);
/// Array (straight shape) or {"outer": [...], "inner": [...]}.
loop::SkewShape skew_shape_of(const json& j);
json to_json(const loop::SkewShape& s);
/// Array of rows, or {"inner": [...], "rows": [[...], ...]}.
loop::Tableau tableau_of(const json& j);
json to_json(const loop::Tableau& t);
/// {"n": n, "m": m, "symbolic": true} or {"n": n, "values": [[...], ...]}.
loop::LoopVarArray var_array_of(const json& j);
/// [[v_1^(1), ..., v_1^(n)], ...] with exact entries.
std::vector<std::vector<Rational>> rational_rows_of(const json& j);
std::vector<std::vector<double>> real_rows_of(const json& j);

/// A word as a digit string "3222311111233" or an array of letters.
crystal::Word word_of(const json& j);
crystal::OneRowTableau one_row_of(const json& j, int n);
json to_json(const crystal::OneRowTableau& b);

/// {"boxes": [0, 1, ...]}, {"positions": [...]} or an ASCII string.
boxball::BoxBallState state_of(const json& j);
json to_json(const boxball::BoxBallState& s);

struct MatrixPolyData {
  loop::MatrixPoly<double> real;
  std::optional<loop::MatrixPoly<Rational>> exact;
};
MatrixPolyData matrix_poly_of(const json& j);
json to_json(const loop::MatrixPoly<double>& p);

/// Value of a key, or fallback when absent or null.
template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.is_object()) return fallback;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

const json& require_key(const json& j, const char* key);

}  // namespace lsym::capi
