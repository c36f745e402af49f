#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qpain/poly.hpp"

namespace qpain {

// Exact multivariate division: returns a/b if b divides a, else nullopt.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = a, quot;
  while (!rem.is_zero()) {
    const Mono& lm = rem.leading_mono();
    if (!lm.divisible_by(b.leading_mono())) return std::nullopt;
    Mono q = lm.divide(b.leading_mono());
    Rat c = rem.leading_coeff() / b.leading_coeff();
    quot.add_term(q, c);
    rem -= b * Poly::term(q, c);
  }
  return quot;
}

inline Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

namespace detail {

inline mpz_class mpz_gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline mpz_class mpz_lcm_of(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Rational content, signed so the primitive part has positive leading coeff.
inline Rat content(const Poly& p) {
  if (p.is_zero()) return Rat(0);
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : p.terms) {
    g = mpz_gcd_of(g, c.get_num());
    l = mpz_lcm_of(l, c.get_den());
  }
  Rat r(g, l);
  r.canonicalize();
  if (p.leading_coeff() < 0) r = -r;
  return r;
}

inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rat(1) / content(p));
}

inline std::vector<Poly> to_univariate(const Poly& p, const Sym& s) {
  std::vector<Poly> cs(static_cast<std::size_t>(p.degree_in(s)) + 1);
  for (const auto& [m, c] : p.terms) {
    int e = m.exponent(s);
    Mono rest;
    for (const auto& [v, k] : m.exps)
      if (!(v == s)) rest.exps.push_back({v, k});
    cs[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
  return cs;
}

inline Poly from_univariate(const std::vector<Poly>& cs, const Sym& s) {
  Poly r;
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (cs[e].is_zero()) continue;
    r += cs[e] * Poly::term(Mono::var(s, static_cast<int>(e)), 1);
  }
  return r;
}

inline int udeg(const std::vector<Poly>& u) {
  int d = static_cast<int>(u.size()) - 1;
  while (d > 0 && u[static_cast<std::size_t>(d)].is_zero()) --d;
  return u[static_cast<std::size_t>(d)].is_zero() ? -1 : d;
}

Poly gcd(const Poly& a, const Poly& b);

// Standard pseudo-remainder: prem(a, b) = lc(b)^(da-db+1) a mod b.
inline std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  int db = udeg(b);
  const Poly& lb = b[static_cast<std::size_t>(db)];
  int da = udeg(a);
  int target = da - db + 1;
  int steps = 0;
  while (da >= db && da >= 0) {
    Poly la = a[static_cast<std::size_t>(da)];
    for (auto& c : a) c = lb * c;
    ++steps;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(da)] = Poly();
    int nd = udeg(a);
    if (nd == da) throw std::logic_error("prem failed to reduce degree");
    da = nd;
  }
  // pad multiplications so the result equals lc(b)^(da0-db+1) * a mod b
  for (; steps < target; ++steps)
    for (auto& c : a) c = lb * c;
  return a;
}

// Content of the univariate representation (gcd of Poly coefficients).
inline Poly ucontent(const std::vector<Poly>& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g.is_zero() ? Poly(0L) : g;
}

// ---- univariate rational gcd + evaluation probe ----------------------------

// Monic Euclid over Q on dense coefficient vectors; returns gcd degree.
inline int uni_gcd_degree(std::vector<Rat> a, std::vector<Rat> b) {
  auto deg = [](const std::vector<Rat>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  while (deg(b) >= 0) {
    int da = deg(a), db = deg(b);
    for (int k = da; k >= db; --k) {  // a := a mod b (no-op when da < db)
      Rat f = a[static_cast<std::size_t>(k)] / b[static_cast<std::size_t>(db)];
      if (f == 0) continue;
      for (int i = 0; i <= db; ++i)
        a[static_cast<std::size_t>(k - db + i)] -= f * b[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(k)] = 0;
    }
    std::swap(a, b);  // continue with (old b, remainder)
  }
  return deg(a);
}

// Evaluate all variables except `keep` at the given values (indexed against
// `vars`), producing dense univariate coefficients in `keep`.
inline std::vector<Rat> eval_except(const Poly& p, const Sym& keep,
                                    const std::vector<Sym>& vars,
                                    const std::vector<Rat>& vals) {
  std::vector<Rat> out(static_cast<std::size_t>(p.degree_in(keep)) + 1, Rat(0));
  for (const auto& [m, c] : p.terms) {
    Rat v = c;
    int e = 0;
    for (const auto& [s, k] : m.exps) {
      if (s == keep) {
        e = k;
        continue;
      }
      auto it = std::find(vars.begin(), vars.end(), s);
      const Rat& x = vals[static_cast<std::size_t>(it - vars.begin())];
      for (int i = 0; i < k; ++i) v *= x;
    }
    out[static_cast<std::size_t>(e)] += v;
  }
  return out;
}

// Sound coprimality certificate: for each common variable v, find an
// evaluation point where both leading coefficients in v survive and the
// univariate images are coprime; that proves deg_v(gcd) = 0. If every common
// variable is certified the gcd is constant.
inline bool certify_coprime(const Poly& a, const Poly& b) {
  auto va = a.variables();
  auto vb = b.variables();
  std::vector<Sym> common;
  for (const auto& s : va)
    if (std::find(vb.begin(), vb.end(), s) != vb.end()) common.push_back(s);
  if (common.empty()) return true;
  std::vector<Sym> all = va;
  for (const auto& s : vb)
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);

  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  auto next = [&seed]() {
    seed ^= seed >> 12;
    seed ^= seed << 25;
    seed ^= seed >> 27;
    return seed * 0x2545f4914f6cdd1dull;
  };
  for (const Sym& v : common) {
    int dva = a.degree_in(v), dvb = b.degree_in(v);
    bool certified = false;
    for (int trial = 0; trial < 6 && !certified; ++trial) {
      std::vector<Rat> vals;
      vals.reserve(all.size());
      for (std::size_t i = 0; i < all.size(); ++i)
        vals.push_back(Rat(2 + static_cast<long>(next() % 97)));
      auto ua = eval_except(a, v, all, vals);
      auto ub = eval_except(b, v, all, vals);
      auto deg = [](const std::vector<Rat>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
        return d;
      };
      if (deg(ua) != dva || deg(ub) != dvb) continue;  // lc vanished, retry
      if (uni_gcd_degree(ua, ub) == 0) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

// ---- subresultant PRS -------------------------------------------------------

inline Poly gcd_impl(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  if (a0.is_constant() || b0.is_constant()) return Poly(1L);

  // Monomial fast path.
  if (a0.is_monomial() || b0.is_monomial()) {
    const Poly& mono = a0.is_monomial() ? a0 : b0;
    const Poly& other = a0.is_monomial() ? b0 : a0;
    Mono acc = mono.terms.begin()->first;
    for (const auto& [m, c] : other.terms) {
      Mono nxt;
      for (const auto& [s, e] : acc.exps) {
        int ce = std::min(e, m.exponent(s));
        if (ce > 0) nxt.exps.push_back({s, ce});
      }
      acc = nxt;
      if (acc.empty()) break;
    }
    return Poly::term(acc, 1);
  }

  if (certify_coprime(a0, b0)) return Poly(1L);

  auto va = a0.variables();
  auto vb = b0.variables();
  Sym main = Sym::hbar();
  bool found = false;
  for (auto it = va.rbegin(); it != va.rend(); ++it) {
    if (std::find(vb.begin(), vb.end(), *it) != vb.end()) {
      main = *it;
      found = true;
      break;
    }
  }
  if (!found) return Poly(1L);

  auto ua = to_univariate(a0, main);
  auto ub = to_univariate(b0, main);
  Poly ca = ucontent(ua), cb = ucontent(ub);
  Poly cg = gcd(ca, cb);
  for (auto& c : ua) c = divide_exact(c, ca);
  for (auto& c : ub) c = divide_exact(c, cb);

  // Subresultant PRS (Collins); exact divisions keep growth polynomial.
  std::vector<Poly> u = ua, v = ub;
  if (udeg(u) < udeg(v)) std::swap(u, v);
  Poly g(1L), h(1L);
  while (true) {
    int du = udeg(u), dv = udeg(v);
    if (dv < 0) break;
    if (dv == 0) {
      u = {Poly(1L)};
      break;
    }
    int delta = du - dv;
    auto r = prem(u, v);
    if (udeg(r) >= 0) {
      Poly denom = g;
      for (int i = 0; i < delta; ++i) denom = denom * h;
      for (auto& c : r) c = divide_exact(c, denom);
    }
    u = std::move(v);
    v = std::move(r);
    g = u[static_cast<std::size_t>(udeg(u))];
    // h = g^delta h^(1-delta)
    if (delta == 0) {
      // h unchanged
    } else {
      Poly gpow(1L);
      for (int i = 0; i < delta; ++i) gpow = gpow * g;
      if (delta == 1) {
        h = gpow;
      } else {
        Poly hpow(1L);
        for (int i = 0; i < delta - 1; ++i) hpow = hpow * h;
        h = divide_exact(gpow, hpow);
      }
    }
  }
  Poly result = from_univariate(u, main);
  // Remove content in the coefficient ring, then rational content.
  auto ru = to_univariate(result, main);
  Poly rc = ucontent(ru);
  if (!rc.is_zero() && !rc.is_one())
    for (auto& c : ru) c = divide_exact(c, rc);
  result = from_univariate(ru, main) * cg;
  return primitive_part(result);
}

inline Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace detail

// Primitive gcd, positive leading coefficient.
inline Poly poly_gcd(const Poly& a, const Poly& b) { return detail::gcd(a, b); }

}  // namespace qpain
