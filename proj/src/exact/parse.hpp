#pragma once

#include <string>

#include "exact/ratexpr.hpp"

namespace lsym {

/// Reads the canonical string form of polynomials and rational expressions:
/// rationals, variables x[i]^(j) (colors reduced mod n), parentheses,
/// + - * / and ^ with a nonnegative integer exponent.
/// Throws Error(Parse) on malformed input.
RationalExpr parse_expression(const std::string& text, long n);

}  // namespace lsym
