#include "btlab/parse.hpp"

#include <cctype>

namespace btlab {

namespace {

class Parser {
 public:
  Parser(Field f, std::string_view text) : f_(f), s_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(uint8_t(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    for (;;) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RationalFunction factor() {
    if (eat('-')) return -factor();
    RationalFunction base = atom();
    if (eat('^')) {
      long k = integer_literal();
      RationalFunction r = RationalFunction::one(f_);
      RationalFunction b = base;
      long n = k < 0 ? -k : k;
      for (long i = 0; i < n; ++i) r = r * b;
      if (k < 0) {
        if (base.is_zero()) fail("zero to a negative power");
        r = r.inverse();
      }
      return r;
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction::t(f_);
    }
    if (std::isdigit(uint8_t(c))) {
      long v = integer_literal();
      return RationalFunction::constant(Scalar(f_, v));
    }
    fail("expected number, 't' or '('");
  }

  long integer_literal() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(uint8_t(s_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(uint8_t(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1L << 40)) fail("integer literal too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Field f_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(Field f, std::string_view text) {
  return Parser(f, text).parse();
}

}  // namespace btlab
