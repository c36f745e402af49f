#pragma once

#include <cctype>
#include <string>

#include "qpain/element.hpp"

namespace qpain {

// Recursive-descent parser for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        ('/' by scalar values only)
//   factor := atom ('^' integer)?
//   atom   := generator | 'inv(' shifted ')' | scalar-symbol | rational
//           | '(' expr ')'
//   generator := 'f' index ; scalar-symbol := 'hbar'|'t'|'E'|'a' index|'x'|'y'
//   shifted := generator (('+'|'-') expr)?      (shift must be scalar)
// Whitespace-insensitive. Elements stay in canonical normal form throughout.
class Parser {
 public:
  Parser(std::string src, const AlgebraSpec& spec) : src_(std::move(src)), spec_(spec) {}

  Element parse() {
    Element e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string src_;
  AlgebraSpec spec_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (src_.compare(pos_, w.size(), w) == 0) {
      // must not be followed by an identifier character
      std::size_t after = pos_ + w.size();
      if (after < src_.size() &&
          (std::isalnum(static_cast<unsigned char>(src_[after])) || src_[after] == '_'))
        return false;
      pos_ = after;
      return true;
    }
    return false;
  }

  int parse_integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      neg = src_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  Element parse_expr() {
    Element e = parse_term();
    while (true) {
      if (eat('+')) {
        e += parse_term();
      } else if (eat('-')) {
        e -= parse_term();
      } else {
        return e;
      }
    }
  }

  Element parse_term() {
    Element e = parse_factor();
    while (true) {
      if (eat('*')) {
        e = nc_mul(e, parse_factor());
      } else if (eat('/')) {
        Element d = parse_factor();
        if (!d.is_scalar()) fail("division is defined for scalar values only");
        Scalar sc = d.scalar_value();
        if (sc.is_zero()) throw DivisionByZero();
        e = e.scaled(sc.inv());
      } else {
        return e;
      }
    }
  }

  Element parse_factor() {
    Element a = parse_atom();
    skip_ws();
    if (eat('^')) {
      int n = parse_integer();
      if (n >= 0) return nc_pow(a, n);
      // negative powers only for shifted-generator bases
      auto aff = backlund_affine(a);
      if (!aff) fail("negative power of a non-invertible base");
      auto [g, coeff, off] = *aff;
      Scalar qpow(1L);
      for (int k = 0; k < -n; ++k) qpow = qpow * coeff;
      return inv_power(spec_, g, -(off / coeff), n).scaled(qpow.inv());
    }
    return a;
  }

  // q*f_g + s pattern for inverses
  std::optional<std::tuple<int, Scalar, Scalar>> backlund_affine(const Element& e) {
    int gen = -1;
    Scalar coeff, off;
    for (const auto& [m, c] : e.terms) {
      if (m.is_unit()) {
        off = c;
        continue;
      }
      if (m.factors.size() != 1) return std::nullopt;
      const Factor& f = m.factors.front();
      if (f.exp == 1 && f.shift.is_zero() && gen < 0) {
        gen = f.gen;
        coeff = c;
        continue;
      }
      if (f.exp < 0 && gen < 0 && e.terms.size() == 1) {
        // a bare inverse power: (inv_power)^n handled by nc_pow-like expansion
        return std::nullopt;
      }
      return std::nullopt;
    }
    if (gen < 0) return std::nullopt;
    return std::make_tuple(gen, coeff, off);
  }

  Element parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat_word("inv")) {
      if (!eat('(')) fail("expected '(' after inv");
      Element inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      // inner must be generator minus central scalar
      int gen = -1;
      Scalar coeff, off;
      for (const auto& [m, cc] : inner.terms) {
        if (m.is_unit()) {
          off = cc;
          continue;
        }
        if (m.factors.size() != 1 || m.factors.front().exp != 1 ||
            !m.factors.front().shift.is_zero() || gen >= 0)
          throw InvalidInverse();
        gen = m.factors.front().gen;
        coeff = cc;
      }
      if (gen < 0 || coeff.is_zero()) throw InvalidInverse();
      // (q f_g + s)^-1 = q^-1 (f_g - (-s/q))^-1
      return inv_power(spec_, gen, -(off / coeff), -1).scaled(coeff.inv());
    }
    if (eat_word("hbar")) return Element::unit(spec_, Scalar::hbar());
    if (eat_word("t")) return Element::unit(spec_, Scalar::t());
    if (eat_word("E")) return Element::unit(spec_, Scalar::e());
    if (eat_word("x")) return Element::unit(spec_, Scalar::sx());
    if (eat_word("y")) return Element::unit(spec_, Scalar::sy());
    if (c == 'f') {
      ++pos_;
      int idx = parse_integer();
      if (idx < 0 || idx >= spec_.num_gens())
        throw IndexOutOfRange("generator f" + std::to_string(idx));
      return Element::generator(spec_, idx);
    }
    if (c == 'a') {
      ++pos_;
      int idx = parse_integer();
      int nalpha = spec_.num_gens() - (spec_.is_pii() ? 1 : 0);
      if (idx < 0 || idx >= nalpha)
        throw IndexOutOfRange("parameter a" + std::to_string(idx));
      return Element::unit(spec_, Scalar::alpha(idx));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + (src_[pos_] - '0');
        ++pos_;
      }
      return Element::unit(spec_, Scalar(Rat(v)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

inline Element parse_expression(const std::string& src, const AlgebraSpec& spec) {
  return Parser(src, spec).parse();
}

}  // namespace qpain
