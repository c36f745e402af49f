#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qpain/poly.hpp"
#include "qpain/polydiv.hpp"

namespace qpain {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("DivisionByZero") {}
};

// Exact rational function in the commutative symbols. Canonical form:
// gcd(num, den) = 1, den has leading coefficient 1, zero is 0/1.
class Scalar {
 public:
  Poly num;
  Poly den;

  Scalar() : num(), den(1L) {}
  explicit Scalar(const Rat& c) : num(c), den(1L) {}
  explicit Scalar(long c) : num(c), den(1L) {}
  Scalar(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  static Scalar var(const Sym& s) { return Scalar(Poly::var(s), Poly(1L)); }
  static Scalar of(const Poly& p) { return Scalar(p, Poly(1L)); }
  static Scalar hbar() { return var(Sym::hbar()); }
  static Scalar t() { return var(Sym::t()); }
  static Scalar e() { return var(Sym::e()); }
  static Scalar alpha(int i) { return var(Sym::alpha(i)); }
  static Scalar sx() { return var(Sym::x()); }
  static Scalar sy() { return var(Sym::y()); }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }

  void normalize() {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
      den = Poly(1L);
      return;
    }
    if (!den.is_one()) {
      Poly g = poly_gcd(num, den);
      if (!g.is_one() && !g.is_constant()) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
      }
      // Make den monic under the term order.
      Rat lc = den.leading_coeff();
      if (lc != 1) {
        num = num.scaled(Rat(1) / lc);
        den = den.scaled(Rat(1) / lc);
      }
    }
  }

  // Inputs canonical; reduce cross-gcds first so normalization stays cheap.
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den.is_one() && b.den.is_one()) {
      Scalar r;
      r.num = a.num + b.num;
      r.den = Poly(1L);
      return r;
    }
    if (a.den == b.den) return Scalar(a.num + b.num, a.den);
    Poly g = poly_gcd(a.den, b.den);
    if (g.is_constant()) return Scalar(a.num * b.den + b.num * a.den, a.den * b.den);
    Poly da = divide_exact(a.den, g), db = divide_exact(b.den, g);
    return Scalar(a.num * db + b.num * da, a.den * db);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator-(const Scalar& a) {
    Scalar r;
    r.num = -a.num;
    r.den = a.den;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den.is_one() && b.den.is_one()) {
      Scalar r;
      r.num = a.num * b.num;
      r.den = Poly(1L);
      return r;
    }
    Poly g1 = poly_gcd(a.num, b.den);
    Poly g2 = poly_gcd(b.num, a.den);
    Poly an = g1.is_constant() ? a.num : divide_exact(a.num, g1);
    Poly bd = g1.is_constant() ? b.den : divide_exact(b.den, g1);
    Poly bn = g2.is_constant() ? b.num : divide_exact(b.num, g2);
    Poly ad = g2.is_constant() ? a.den : divide_exact(a.den, g2);
    Scalar r;
    r.num = an * bn;
    r.den = ad * bd;
    Rat lc = r.den.leading_coeff();
    if (lc != 1) {
      r.num = r.num.scaled(Rat(1) / lc);
      r.den = r.den.scaled(Rat(1) / lc);
    }
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inv();
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den, num);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.num <=> b.num; c != 0) return c;
    return a.den <=> b.den;
  }

  // d/dt with dt=1, dE=E/2, all other symbols constant.
  static Poly d_t_poly(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms) {
      for (const auto& [s, e] : m.exps) {
        if (s == Sym::t()) {
          Mono dm = m.times(Mono::var(Sym::t(), -1));
          r.add_term(dm, c * e);
        } else if (s == Sym::e()) {
          r.add_term(m, c * e / 2);  // d(E^e) = (e/2) E^e
        }
      }
    }
    return r;
  }

  Scalar d_t() const {
    // Quotient rule: (n/d)' = (n'd - nd')/d^2.
    Poly dn = d_t_poly(num);
    if (den.is_one()) return Scalar(dn, Poly(1L));
    Poly dd = d_t_poly(den);
    return Scalar(dn * den - num * dd, den * den);
  }

  // Simultaneous substitution; DivisionByZero if the denominator vanishes.
  Scalar subst(const std::map<Sym, Scalar>& map) const {
    auto eval = [&](const Poly& p) {
      Scalar acc;
      for (const auto& [m, c] : p.terms) {
        Scalar term{c};
        for (const auto& [s, e] : m.exps) {
          auto it = map.find(s);
          Scalar base = (it != map.end()) ? it->second : Scalar::var(s);
          for (int k = 0; k < e; ++k) term *= base;
        }
        acc += term;
      }
      return acc;
    };
    Scalar n = eval(num), d = eval(den);
    if (d.is_zero()) throw DivisionByZero();
    return n / d;
  }

  std::string str() const;
};

}  // namespace qpain
