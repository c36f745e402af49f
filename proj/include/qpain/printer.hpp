#pragma once

#include <sstream>
#include <string>

#include "qpain/element.hpp"

namespace qpain {

namespace print_detail {

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string mono_ascii(const Mono& m) {
  std::string s;
  bool first = true;
  for (const auto& [v, e] : m.exps) {
    if (!first) s += "*";
    first = false;
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Terms printed leading-first (descending graded lex).
inline std::string poly_ascii(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string ms = mono_ascii(m);
    if (ms.empty()) {
      s += rat_str(a);
    } else if (a == 1) {
      s += ms;
    } else {
      s += rat_str(a) + "*" + ms;
    }
  }
  return s;
}

}  // namespace print_detail

inline std::string Poly::str() const { return print_detail::poly_ascii(*this); }

inline std::string Scalar::str() const {
  if (den.is_one()) return print_detail::poly_ascii(num);
  std::string n = print_detail::poly_ascii(num);
  std::string d = print_detail::poly_ascii(den);
  bool nsimple = num.terms.size() <= 1;
  bool dsimple = den.terms.size() <= 1 && den.leading_coeff() == 1;
  std::string ns = nsimple ? n : "(" + n + ")";
  std::string ds = dsimple ? d : "(" + d + ")";
  return ns + "/" + ds;
}

namespace print_detail {

// A scalar as a multiplicative prefix: "", "-", "2*", "(a0 + 1)*", ...
inline std::string coeff_prefix(const Scalar& c, bool* pure_sign) {
  *pure_sign = false;
  if (c.is_one()) {
    *pure_sign = true;
    return "";
  }
  Scalar mc = -c;
  if (mc.is_one()) {
    *pure_sign = true;
    return "-";
  }
  bool simple = c.den.is_one() && c.num.terms.size() == 1;
  std::string s = c.str();
  if (!simple) s = "(" + s + ")";
  return s + "*";
}

inline std::string factor_ascii(const Factor& f) {
  std::string base;
  if (f.shift.is_zero()) {
    base = "f" + std::to_string(f.gen);
  } else {
    bool simple = f.shift.den.is_one() && f.shift.num.terms.size() == 1;
    std::string sh = f.shift.str();
    base = "f" + std::to_string(f.gen) + " - " + (simple ? sh : "(" + sh + ")");
  }
  if (f.exp == 1) return f.shift.is_zero() ? base : "(" + base + ")";
  if (f.exp > 1) {
    return f.shift.is_zero() ? base + "^" + std::to_string(f.exp)
                             : "(" + base + ")^" + std::to_string(f.exp);
  }
  std::string inv = "inv(" + base + ")";
  if (f.exp == -1) return inv;
  return inv + "^" + std::to_string(-f.exp);
}

inline std::string monomial_ascii(const Monomial& m) {
  std::string s;
  bool first = true;
  for (const Factor& f : m.factors) {
    if (!first) s += "*";
    first = false;
    s += factor_ascii(f);
  }
  return s;
}

inline std::string factor_latex(const Factor& f) {
  std::string base = "f_{" + std::to_string(f.gen) + "}";
  std::string inner = base;
  // shifts rendered inline; exponent wraps the (shifted) base
  auto scalar_latex = [](const Scalar& c) {
    // minimal conversion: symbol names to latex glyphs
    std::string s = c.str();
    auto replace_all = [&](const std::string& from, const std::string& to) {
      std::size_t pos = 0;
      while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
      }
    };
    replace_all("hbar", "\\hbar");
    for (int i = 9; i >= 0; --i)
      replace_all("a" + std::to_string(i), "\\alpha_{" + std::to_string(i) + "}");
    replace_all("*", " ");
    return s;
  };
  if (!f.shift.is_zero()) inner = "(" + base + " - " + scalar_latex(f.shift) + ")";
  if (f.exp == 1) return inner;
  return inner + "^{" + std::to_string(f.exp) + "}";
}

}  // namespace print_detail

inline std::string Element::str() const {
  using namespace print_detail;
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool pure_sign = false;
    std::string pre = coeff_prefix(c, &pure_sign);
    std::string body = monomial_ascii(m);
    std::string piece;
    if (body.empty()) {
      piece = pure_sign ? (pre == "-" ? "-1" : "1") : pre.substr(0, pre.size() - 1);
    } else {
      piece = pre + body;
    }
    if (first) {
      s = piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

inline std::string Element::latex() const {
  using namespace print_detail;
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool pure_sign = false;
    std::string pre = coeff_prefix(c, &pure_sign);
    // reuse ascii coefficient, converting glyphs
    auto to_latex = [](std::string str) {
      auto replace_all = [&](const std::string& from, const std::string& to) {
        std::size_t pos = 0;
        while ((pos = str.find(from, pos)) != std::string::npos) {
          str.replace(pos, from.size(), to);
          pos += to.size();
        }
      };
      replace_all("hbar", "\\hbar");
      for (int i = 9; i >= 0; --i)
        replace_all("a" + std::to_string(i), "\\alpha_{" + std::to_string(i) + "}");
      replace_all("*", " ");
      return str;
    };
    std::string body;
    for (const Factor& f : m.factors) {
      if (!body.empty()) body += " ";
      body += factor_latex(f);
    }
    std::string piece;
    if (body.empty()) {
      piece = pure_sign ? (pre == "-" ? "-1" : "1") : to_latex(pre.substr(0, pre.size() - 1));
    } else {
      piece = to_latex(pre) + body;
    }
    if (first) {
      s = piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

}  // namespace qpain
