#pragma once

// Small recursive-descent parser shared by every text form in the library
// (scalars, Hecke elements, noncommutative polynomials, symmetric
// polynomials). Grammar:
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { (*|.|/|<juxtaposition>) power }
//   power   := primary [ ^ [-] integer ]
//   primary := integer | ( expr ) | name [ ( integer {, integer} ) ]
//
// where name is [A-Za-z_]+[0-9]*. What a name means is supplied by the
// caller through ExprGrammar.

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rea/errors.hpp"

namespace rea {

template <class T>
struct ExprGrammar {
  std::function<T(const mpz_class&)> integer;
  // Resolves a name; indices is empty unless the name is indexed.
  std::function<T(std::string_view name, const std::vector<int>& indices)> atom;
  std::function<bool(std::string_view name)> indexed = [](std::string_view) { return false; };
  // Optional: division and negative powers are rejected when absent.
  std::function<T(const T&, const T&)> divide;
  std::function<T(const T&)> invert;
};

namespace detail {

template <class T>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprGrammar<T>& g) : s_(text), g_(g) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  T expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    T v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  T term() {
    T v = power();
    for (;;) {
      if (eat('*') || eat('.')) {
        v = v * power();
      } else if (eat('/')) {
        if (!g_.divide) fail("division not supported here");
        v = g_.divide(v, power());
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  T power() {
    T base = primary();
    if (!eat('^')) return base;
    bool neg = eat('-');
    long e = integer_literal();
    if (neg) {
      if (!g_.invert) fail("negative powers not supported here");
      base = g_.invert(base);
    }
    T r = g_.integer(mpz_class(1));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  long integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  T primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return g_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      std::vector<int> idx;
      if (g_.indexed(name)) {
        if (!eat('(')) fail("expected '(' after " + std::string(name));
        do {
          idx.push_back(static_cast<int>(integer_literal()));
        } while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
      return g_.atom(name, idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExprGrammar<T>& g_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_expression(std::string_view text, const ExprGrammar<T>& grammar) {
  return detail::ExprParser<T>(text, grammar).parse();
}

}  // namespace rea
