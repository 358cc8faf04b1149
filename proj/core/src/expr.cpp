#include "nonarch/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nonarch {

namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned long p) : s_(text), p_(p) {}

  PadicNumber run() {
    PadicNumber v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + std::string(s_) + "\": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PadicNumber expr() {
    PadicNumber v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  PadicNumber term() {
    PadicNumber v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const PadicNumber d = unary();
        if (d.is_exact_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  PadicNumber unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    PadicNumber b = base();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be an integer");
      const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (b.is_exact_zero() && (neg || e == 0)) fail("bad power of zero");
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  PadicNumber base() {
    skip();
    if (eat('(')) {
      PadicNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PadicNumber::exact(p_, mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return PadicNumber::pi(p_);
    }
    if (s_[pos_] == 'p') {
      ++pos_;
      return PadicNumber::exact(p_, static_cast<long>(p_));
    }
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  unsigned long p_;
  std::size_t pos_ = 0;
};

}  // namespace

PadicNumber parse_padic_expr(std::string_view text, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("expression: p must be prime");
  return Parser(text, p).run();
}

}  // namespace nonarch
