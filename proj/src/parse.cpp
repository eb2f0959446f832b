#include "crystals/parse.hpp"

#include <cctype>

namespace crystals::alg {

namespace {

class Parser {
public:
  Parser(const std::string& s, CtxPtr ctx) : s_(s), ctx_(std::move(ctx)) {}

  RF parse() {
    RF r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw parse_error("unexpected input at position " +
                        std::to_string(pos_));
    return r;
  }

private:
  RF expr() {
    RF r = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        r += term();
      } else if (peek() == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RF term() {
    RF r = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        r *= factor();
      } else if (peek() == '/') {
        ++pos_;
        RF d = factor();
        if (d.is_zero()) throw parse_error("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RF factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    RF base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return neg ? -base : base;
  }

  RF atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      RF r = expr();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RF::constant(ctx_, Rat(static_cast<long>(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      return RF::var(ctx_, ctx_->intern(s_.substr(start, pos_ - start)));
    }
    throw parse_error("unexpected character at position " +
                      std::to_string(pos_));
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected integer at position " +
                        std::to_string(pos_));
    long long v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  CtxPtr ctx_;
  size_t pos_ = 0;
};

}  // namespace

RF parse_rf(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace crystals::alg
