// Small recursive-descent parser shared by the scalar and polynomial readers.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | identifier | '(' expr ')'
//
// Ops supplies number(mpq), identifier(name), divide(a, b), power(a, e).

#ifndef HOCHBRACKET_EXPR_PARSER_HPP_
#define HOCHBRACKET_EXPR_PARSER_HPP_

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hochbracket/errors.hpp"

namespace hb {

namespace detail {

template <class T, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view s, const Ops& ops) : s_(s), ops_(ops) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at position " +
                     std::to_string(pos_) + ": " + what);
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

  T expr() {
    T v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = ops_.divide(v, unary());
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return ops_.power(base, neg ? -e : e);
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.number(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return ops_.identifier(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Ops& ops_;
  size_t pos_ = 0;
};

}  // namespace detail

template <class T, class Ops>
T parse_expression(std::string_view text, const Ops& ops) {
  return detail::ExprParser<T, Ops>(text, ops).parse();
}

}  // namespace hb

#endif  // HOCHBRACKET_EXPR_PARSER_HPP_
