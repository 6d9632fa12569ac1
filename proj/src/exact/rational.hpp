#pragma once

#include <gmpxx.h>

#include <string>

namespace lsym {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" in base 10; throws Error(Parse) otherwise.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace lsym
