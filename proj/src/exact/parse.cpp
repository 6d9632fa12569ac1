#include "exact/parse.hpp"

#include <cctype>

#include "common/error.hpp"

namespace lsym {

namespace {

class Parser {
 public:
  Parser(const std::string& s, long n) : s_(s), n_(n) {}

  RationalExpr run() {
    RationalExpr e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in expression");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) error("expected an integer");
    if (pos_ - start > 18) error("integer too long");
    return std::stol(s_.substr(start, pos_ - start));
  }

  RationalExpr expr() {
    RationalExpr acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    while (true) {
      if (accept('*')) acc = acc * unary();
      else if (accept('/')) acc = acc / unary();
      else return acc;
    }
  }

  RationalExpr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = atom();
    if (!accept('^')) return base;
    const long e = integer();
    if (e < 0) error("negative exponent");
    RationalExpr out(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  RationalExpr atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalExpr e = expr();
      expect(')');
      return e;
    }
    if (c == 'x') {
      ++pos_;
      expect('[');
      const long site = integer();
      expect(']');
      expect('^');
      expect('(');
      const long color = integer();
      expect(')');
      if (site < 1) error("site must be positive");
      return RationalExpr::var(VarId::make(site, color, n_));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalExpr(Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  long n_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalExpr parse_expression(const std::string& text, long n) {
  require(n >= 1, "n must be positive");
  return Parser(text, n).run();
}

}  // namespace lsym
