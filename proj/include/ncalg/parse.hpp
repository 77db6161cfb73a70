#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "ncalg/error.hpp"

namespace ncalg {

// Recursive-descent reader for arithmetic expressions
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := factor (('*'|'/') factor)*
//   factor := atom ['^' exponent]
//   exponent := integer | '-' integer | '(' ['-'] integer ['/' integer] ')'
// The ring is supplied by Ops, which must provide
//   V number(const mpq_class&), V ident(const std::string&),
//   V add(V, V), V sub(V, V), V mul(V, V), V div(V, V), V neg(V),
//   V pow(V, const mpq_class&).
template <class V, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  V run() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  Ops& ops_;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
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
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  V expr() {
    V v = [&] {
      if (eat('-')) return ops_.neg(term());
      eat('+');
      return term();
    }();
    while (true) {
      if (eat('+'))
        v = ops_.add(v, term());
      else if (eat('-'))
        v = ops_.sub(v, term());
      else
        return v;
    }
  }
  V term() {
    V v = factor();
    while (true) {
      if (eat('*'))
        v = ops_.mul(v, factor());
      else if (eat('/'))
        v = ops_.div(v, factor());
      else
        return v;
    }
  }
  V factor() {
    V v = atom();
    if (eat('^')) v = ops_.pow(v, exponent());
    return v;
  }
  mpq_class exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      mpq_class e(integer());
      if (eat('/')) e /= mpq_class(integer());
      if (!eat(')')) fail("expected ')'");
      e.canonicalize();
      return neg ? mpq_class(-e) : e;
    }
    bool neg = eat('-');
    mpq_class e(integer());
    return neg ? mpq_class(-e) : e;
  }
  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return ops_.neg(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.number(mpq_class(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return ops_.ident(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace ncalg
