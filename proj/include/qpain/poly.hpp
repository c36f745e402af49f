#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qpain/symbols.hpp"

namespace qpain {

using Rat = mpq_class;

// Sparse exponent vector, sorted by Sym, no zero exponents.
struct Mono {
  std::vector<std::pair<Sym, int>> exps;

  int degree() const {
    int d = 0;
    for (const auto& [s, e] : exps) d += e;
    return d;
  }
  int exponent(const Sym& s) const {
    for (const auto& [v, e] : exps)
      if (v == s) return e;
    return 0;
  }
  bool empty() const { return exps.empty(); }

  // Graded lexicographic: total degree first, then lex on the fixed Sym order
  // (a higher power of an earlier symbol is larger).
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
      const auto& [sa, ea] = a.exps[i];
      const auto& [sb, eb] = b.exps[j];
      if (sa != sb) {
        // The one whose leading symbol is earlier has more weight on it.
        return (sa < sb) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      if (ea != eb) return ea <=> eb;
      ++i, ++j;
    }
    if (i < a.exps.size()) return std::strong_ordering::greater;
    if (j < b.exps.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.exps == b.exps; }

  static Mono one() { return {}; }
  static Mono var(const Sym& s, int e = 1) {
    Mono m;
    if (e != 0) m.exps.push_back({s, e});
    return m;
  }
  Mono times(const Mono& o) const {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < exps.size() || j < o.exps.size()) {
      if (j >= o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first)) {
        r.exps.push_back(exps[i++]);
      } else if (i >= exps.size() || o.exps[j].first < exps[i].first) {
        r.exps.push_back(o.exps[j++]);
      } else {
        int e = exps[i].second + o.exps[j].second;
        if (e != 0) r.exps.push_back({exps[i].first, e});
        ++i, ++j;
      }
    }
    return r;
  }
  // Divides iff every exponent of o is <= ours.
  bool divisible_by(const Mono& o) const {
    for (const auto& [s, e] : o.exps)
      if (exponent(s) < e) return false;
    return true;
  }
  Mono divide(const Mono& o) const {
    Mono inv;
    inv.exps = o.exps;
    for (auto& [s, e] : inv.exps) e = -e;
    return times(inv);
  }
};

// Multivariate polynomial over Q. Canonical: no zero coefficients stored.
class Poly {
 public:
  // Terms sorted ascending in graded lex; leading term is rbegin().
  std::map<Mono, Rat> terms;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) terms[Mono::one()] = c;
  }
  explicit Poly(long c) : Poly(Rat(c)) {}
  static Poly var(const Sym& s, int e = 1) {
    Poly p;
    p.terms[Mono::var(s, e)] = 1;
    return p;
  }
  static Poly term(const Mono& m, const Rat& c) {
    Poly p;
    if (c != 0) p.terms[m] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.empty() && terms.begin()->second == 1;
  }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  Rat constant_value() const {
    if (terms.empty()) return Rat(0);
    return terms.begin()->second;
  }
  bool is_monomial() const { return terms.size() == 1; }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }
  const Mono& leading_mono() const { return terms.rbegin()->first; }
  const Rat& leading_coeff() const { return terms.rbegin()->second; }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a.terms) r.terms[m] = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) r.add_term(ma.times(mb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms) r.terms[m] = k * c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    auto i = a.terms.rbegin();
    auto j = b.terms.rbegin();
    while (i != a.terms.rend() && j != b.terms.rend()) {
      if (auto c = i->first <=> j->first; c != 0) return c;
      if (i->second != j->second) return i->second < j->second ? std::strong_ordering::less : std::strong_ordering::greater;
      ++i, ++j;
    }
    if (i != a.terms.rend()) return std::strong_ordering::greater;
    if (j != b.terms.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  std::vector<Sym> variables() const {
    std::vector<Sym> vs;
    for (const auto& [m, c] : terms)
      for (const auto& [s, e] : m.exps)
        if (std::find(vs.begin(), vs.end(), s) == vs.end()) vs.push_back(s);
    std::sort(vs.begin(), vs.end());
    return vs;
  }

  int degree_in(const Sym& s) const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.exponent(s));
    return d;
  }

  // Coefficient of s^e, as a polynomial in the remaining variables.
  Poly coeff_in(const Sym& s, int e) const {
    Poly r;
    for (const auto& [m, c] : terms) {
      if (m.exponent(s) != e) continue;
      Mono rest;
      for (const auto& [v, k] : m.exps)
        if (!(v == s)) rest.exps.push_back({v, k});
      r.add_term(rest, c);
    }
    return r;
  }

  std::string str() const;
};

}  // namespace qpain
