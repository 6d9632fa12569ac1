#include "exact/rational.hpp"

#include "common/error.hpp"

namespace lsym {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    fail(ErrorCode::Parse, "malformed rational literal '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace lsym
