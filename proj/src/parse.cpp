#include "ccq/parse.hpp"

#include <cctype>
#include <string>

#include "ccq/error.hpp"

namespace ccq {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, bool univariate) : text_(text), univariate_(univariate) {}

  BiPoly run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    BiPoly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyParseError(static_cast<int>(pos_) + 1, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const Rational d = Rational(integer_literal());
        if (d == 0) fail("division by zero");
        acc *= 1 / d;
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (accept('^')) {
      const Integer e = integer_literal();
      if (e > kMaxExponent) fail("exponent too large");
      return pow(base, static_cast<int>(e.get_si()));
    }
    return base;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BiPoly atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(Rational(integer_literal()));
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      const Integer idx = integer_literal();
      if (idx == 1) return BiPoly::variable(Var::x1);
      if (idx == 2 && !univariate_) return BiPoly::variable(Var::x2);
      pos_ = start - 1;
      fail("variable x" + idx.get_str() + " not allowed here");
    }
    if (c == 'u' && univariate_) {
      ++pos_;
      return BiPoly::variable(Var::x1);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  bool univariate_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text, false).run(); }

UniPoly parse_unipoly(std::string_view text) {
  const BiPoly p = Parser(text, true).run();
  const auto c = p.x2_coeffs();
  return c.empty() ? UniPoly{} : c[0];
}

}  // namespace ccq
