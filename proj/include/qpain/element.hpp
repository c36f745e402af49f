#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qpain/algebra.hpp"
#include "qpain/errors.hpp"
#include "qpain/scalar.hpp"

namespace qpain {

// One factor (f_gen - shift)^exp of a normal-form word.
// Invariants: exp != 0; exp > 0 implies shift == 0 (positive powers live in
// the plain basis, shifted bases are kept only for inverse powers).
struct Factor {
  int gen;
  Scalar shift;
  int exp;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.gen == b.gen && a.exp == b.exp && a.shift == b.shift;
  }
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    if (auto c = a.exp <=> b.exp; c != 0) return c;
    return a.shift <=> b.shift;
  }
};

// Ordered product of factors, ascending generator index, at most one factor
// per generator. The empty word is the unit monomial.
struct Monomial {
  std::vector<Factor> factors;

  bool is_unit() const { return factors.empty(); }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors == b.factors;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    // Total-degree-ish order for stable printing: compare lexicographically.
    std::size_t i = 0;
    for (; i < a.factors.size() && i < b.factors.size(); ++i) {
      if (auto c = a.factors[i] <=> b.factors[i]; c != 0) return c;
    }
    return a.factors.size() <=> b.factors.size();
  }
};

// Finite formal sum of monomials with nonzero Scalar coefficients.
class Element {
 public:
  AlgebraSpec spec;
  std::map<Monomial, Scalar> terms;

  explicit Element(const AlgebraSpec& s) : spec(s) {}

  static Element zero(const AlgebraSpec& s) { return Element(s); }
  static Element unit(const AlgebraSpec& s, const Scalar& c = Scalar(1L)) {
    Element e(s);
    e.add(Monomial{}, c);
    return e;
  }
  static Element generator(const AlgebraSpec& s, int i) {
    check_gen(s, i);
    Element e(s);
    e.add(Monomial{{Factor{i, Scalar(), 1}}}, Scalar(1L));
    return e;
  }

  static void check_gen(const AlgebraSpec& s, int i) {
    if (i < 0 || i >= s.num_gens()) throw IndexOutOfRange("generator f" + std::to_string(i));
  }

  bool is_zero() const { return terms.empty(); }
  bool is_scalar() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_unit());
  }
  Scalar scalar_value() const {
    if (terms.empty()) return Scalar();
    return terms.begin()->second;
  }

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    if (!(spec == o.spec)) throw AlgebraMismatch();
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    if (!(spec == o.spec)) throw AlgebraMismatch();
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) {
    Element r(a.spec);
    for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
  }
  Element scaled(const Scalar& c) const {
    Element r(spec);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.spec == b.spec && a.terms == b.terms;
  }

  std::string str() const;
  std::string latex() const;
};

namespace nf {

// ---- canonical single-generator products -----------------------------------
// Basis over one generator: the unit, plain powers x^a (a > 0), and shifted
// inverse powers (x - c)^(-k). Products decompose exactly by binomials and
// partial fractions; same-generator factors commute.

using BasisTerm = std::pair<std::optional<Factor>, Scalar>;  // factor-or-unit

inline void basis_add(std::vector<BasisTerm>& acc, const std::optional<Factor>& f,
                      const Scalar& c) {
  if (c.is_zero()) return;
  for (auto& [g, k] : acc) {
    bool same = (!g && !f) || (g && f && *g == *f);
    if (same) {
      k += c;
      return;
    }
  }
  acc.push_back({f, c});
}

inline Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) {
    Rat f(n - i, i + 1);
    f.canonicalize();
    r *= f;
  }
  return r;
}

// Multiply a single basis term by (x - c)^e and append onto out.
inline void basis_mul_factor(std::vector<BasisTerm>& out, int gen,
                             const std::optional<Factor>& base, const Scalar& coeff,
                             const Scalar& c, int e);

// (x - d)^(-k) * (x - c)^(-m), d != c, via partial fractions.
inline void pf_product(std::vector<BasisTerm>& out, int gen, const Scalar& coeff,
                       const Scalar& d, int k, const Scalar& c, int m) {
  if (k == 0) {
    if (m == 0) {
      basis_add(out, std::nullopt, coeff);
    } else {
      basis_add(out, Factor{gen, c, -m}, coeff);
    }
    return;
  }
  if (m == 0) {
    basis_add(out, Factor{gen, d, -k}, coeff);
    return;
  }
  // 1/((x-d)(x-c)) = [1/(x-c) - 1/(x-d)]/(c-d)
  Scalar u = (c - d).inv();
  pf_product(out, gen, coeff * u, d, k - 1, c, m);
  pf_product(out, gen, -(coeff * u), d, k, c, m - 1);
}

inline void basis_mul_factor(std::vector<BasisTerm>& out, int gen,
                             const std::optional<Factor>& base, const Scalar& coeff,
                             const Scalar& c, int e) {
  if (e == 0) {
    basis_add(out, base, coeff);
    return;
  }
  if (e > 0 && !c.is_zero()) {
    // Expand (x-c)^e into plain powers first.
    for (int i = 0; i <= e; ++i) {
      Scalar k = coeff * Scalar(binom(e, i));
      Scalar pw(1L);
      for (int j = 0; j < e - i; ++j) pw *= -c;
      basis_mul_factor(out, gen, base, k * pw, Scalar(), i);
    }
    return;
  }
  if (!base) {
    basis_add(out, e > 0 ? std::optional<Factor>(Factor{gen, Scalar(), e})
                         : std::optional<Factor>(Factor{gen, c, e}),
              coeff);
    return;
  }
  const Factor& b = *base;
  if (e > 0) {
    // c == 0 here. base * x^e
    if (b.exp > 0) {
      basis_add(out, Factor{gen, Scalar(), b.exp + e}, coeff);
      return;
    }
    // (x-d)^(-k) * x^e: write x = (x-d) + d.
    const Scalar& d = b.shift;
    for (int j = 0; j <= e; ++j) {
      Scalar k = coeff * Scalar(binom(e, j));
      Scalar pw(1L);
      for (int i = 0; i < e - j; ++i) pw *= d;
      int ex = j + b.exp;
      if (ex == 0) {
        basis_add(out, std::nullopt, k * pw);
      } else if (ex < 0) {
        basis_add(out, Factor{gen, d, ex}, k * pw);
      } else {
        // positive leftover power of (x-d): expand to plain basis
        basis_mul_factor(out, gen, std::nullopt, k * pw, d, ex);
      }
    }
    return;
  }
  // e < 0
  if (b.exp > 0) {
    // x^a * (x-c)^e: write x = (x-c) + c.
    for (int j = 0; j <= b.exp; ++j) {
      Scalar k = coeff * Scalar(binom(b.exp, j));
      Scalar pw(1L);
      for (int i = 0; i < b.exp - j; ++i) pw *= c;
      int ex = j + e;
      if (ex == 0) {
        basis_add(out, std::nullopt, k * pw);
      } else if (ex < 0) {
        basis_add(out, Factor{gen, c, ex}, k * pw);
      } else {
        basis_mul_factor(out, gen, std::nullopt, k * pw, c, ex);
      }
    }
    return;
  }
  // both inverse powers
  if (b.shift == c) {
    basis_add(out, Factor{gen, c, b.exp + e}, coeff);  // stays negative
    return;
  }
  pf_product(out, gen, coeff, b.shift, -b.exp, c, -e);
}

// Canonical product of same-generator shifted powers.
inline std::vector<BasisTerm> single_gen_product(int gen,
                                                 const std::vector<Factor>& fs) {
  std::vector<BasisTerm> acc{{std::nullopt, Scalar(1L)}};
  for (const Factor& f : fs) {
    std::vector<BasisTerm> next;
    for (const auto& [base, coeff] : acc)
      basis_mul_factor(next, gen, base, coeff, f.shift, f.exp);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace nf

// ---- normal ordering --------------------------------------------------------

Element nc_mul(const Element& a, const Element& b);

namespace nf {

Element word_push(const AlgebraSpec& spec, const Monomial& w, const Factor& f);

inline Element mul_element_factor(const Element& e, const Factor& f) {
  Element r(e.spec);
  for (const auto& [w, c] : e.terms) r += word_push(e.spec, w, f).scaled(c);
  return r;
}

inline Element mul_element_word(const Element& e, const Monomial& w) {
  Element acc = e;
  for (const Factor& f : w.factors) acc = mul_element_factor(acc, f);
  return acc;
}

// Normal-ordered product psi * phi for gen(psi) > gen(phi).
inline Element swap_pair(const AlgebraSpec& spec, const Factor& psi, const Factor& phi) {
  Element out(spec);
  auto comm = spec.comm(psi.gen, phi.gen);
  const int m = psi.exp, n = phi.exp;
  if (comm.kind == AlgebraSpec::CommKind::Zero) {
    out.add(Monomial{{phi, psi}}, Scalar(1L));
    return out;
  }
  if (comm.kind == AlgebraSpec::CommKind::Central) {
    if (m < 0 && n < 0) throw NormalOrderDivergence();
    // B^m A^n = sum_k k! C(m,k) C(n,k) gamma^k A^(n-k) B^(m-k), gamma = q*hbar
    int kmax = (m >= 0 && n >= 0) ? std::min(m, n) : (m >= 0 ? m : n);
    Scalar gamma = Scalar(Rat(comm.q)) * Scalar::hbar();
    Scalar coeff(1L);
    for (int k = 0; k <= kmax; ++k) {
      Monomial w;
      if (n - k != 0) w.factors.push_back(Factor{phi.gen, phi.shift, n - k});
      if (m - k != 0) w.factors.push_back(Factor{psi.gen, psi.shift, m - k});
      out.add(w, coeff);
      if (k == kmax) break;
      Rat step(static_cast<long>(m - k) * static_cast<long>(n - k),
               static_cast<long>(k + 1));
      step.canonicalize();
      coeff = coeff * Scalar(step) * gamma;
    }
    return out;
  }
  // PII pair (f1-c)^m (f0-d)^n with [f1, f0] = 2 hbar f2, [2 hbar f2, f0] = -2 hbar^2.
  if (m < 0 && n < 0) throw NormalOrderDivergence();
  const Scalar h = Scalar::hbar();
  const Scalar& c = psi.shift;
  const Scalar& d = phi.shift;
  if (m >= 1) {
    // (f1-c) * (f0-d)^n = (f0-d)^n (f1-c) + 2n hbar (f0-d)^(n-1) f2
    //                     - n(n-1) hbar^2 (f0-d)^(n-2)
    Element e1(spec);
    {
      Monomial w;
      if (n != 0) w.factors.push_back(Factor{0, d, n});
      w.factors.push_back(Factor{1, c, 1});
      e1.add(w, Scalar(1L));
    }
    {
      Monomial w;
      if (n - 1 != 0) w.factors.push_back(Factor{0, d, n - 1});
      w.factors.push_back(Factor{2, Scalar(), 1});
      e1.add(w, Scalar(Rat(2 * n)) * h);
    }
    {
      Monomial w;
      if (n - 2 != 0) w.factors.push_back(Factor{0, d, n - 2});
      e1.add(w, -(Scalar(Rat(n) * Rat(n - 1)) * h * h));
    }
    if (m == 1) return e1;
    Element rest(spec);
    rest.add(Monomial{{Factor{1, c, m - 1}}}, Scalar(1L));
    return nc_mul(rest, e1);
  }
  // m < 0, n >= 1:
  // (f1-c)^m (f0-d) = (f0-d)(f1-c)^m + 2m hbar (f1-c)^(m-1) f2
  //                   + m(m-1) hbar^2 (f1-c)^(m-2)
  Element e1(spec);
  {
    Monomial w;
    w.factors.push_back(Factor{0, d, 1});
    w.factors.push_back(Factor{1, c, m});
    e1.add(w, Scalar(1L));
  }
  {
    Monomial w;
    w.factors.push_back(Factor{1, c, m - 1});
    w.factors.push_back(Factor{2, Scalar(), 1});
    e1.add(w, Scalar(Rat(2 * m)) * h);
  }
  {
    Monomial w;
    w.factors.push_back(Factor{1, c, m - 2});
    e1.add(w, Scalar(Rat(m) * Rat(m - 1)) * h * h);
  }
  if (n == 1) return e1;
  Element rest(spec);
  rest.add(Monomial{{Factor{0, d, n - 1}}}, Scalar(1L));
  return nc_mul(e1, rest);
}

inline Element word_push(const AlgebraSpec& spec, const Monomial& w, const Factor& f) {
  if (w.factors.empty()) {
    Element r(spec);
    r.add(Monomial{{f}}, Scalar(1L));
    return r;
  }
  const Factor& last = w.factors.back();
  if (last.gen < f.gen) {
    Monomial m = w;
    m.factors.push_back(f);
    Element r(spec);
    r.add(m, Scalar(1L));
    return r;
  }
  Monomial head = w;
  head.factors.pop_back();
  if (last.gen == f.gen) {
    auto basis = single_gen_product(f.gen, {last, f});
    Element r(spec);
    for (const auto& [bf, c] : basis) {
      Monomial m = head;
      if (bf) m.factors.push_back(*bf);
      r.add(m, c);
    }
    return r;
  }
  // last.gen > f.gen: swap, then absorb the rewritten tail into the head.
  Element s = swap_pair(spec, last, f);
  Element r(spec);
  Element headel(spec);
  headel.add(head, Scalar(1L));
  for (const auto& [u, c] : s.terms) r += mul_element_word(headel, u).scaled(c);
  return r;
}

}  // namespace nf

inline Element nc_mul(const Element& a, const Element& b) {
  if (!(a.spec == b.spec)) throw AlgebraMismatch();
  Element r(a.spec);
  for (const auto& [wb, cb] : b.terms) {
    Element partial(a.spec);
    for (const auto& [wa, ca] : a.terms) {
      Element base(a.spec);
      base.add(wa, ca);
      partial += nf::mul_element_word(base, wb);
    }
    r += partial.scaled(cb);
  }
  return r;
}

inline Element nc_mul(const Element& a, const Element& b, const Element& c) {
  return nc_mul(nc_mul(a, b), c);
}

inline Element nc_commutator(const Element& a, const Element& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

// (f_i - c)^n as an Element; positive shifted powers expand to the plain basis.
inline Element inv_power(const AlgebraSpec& spec, int i, const Scalar& c, int n) {
  Element::check_gen(spec, i);
  if (n == 0) throw ZeroPower();
  Element r(spec);
  if (n > 0 && !c.is_zero()) {
    auto basis = nf::single_gen_product(i, {Factor{i, c, n}});
    for (const auto& [bf, k] : basis) {
      Monomial m;
      if (bf) m.factors.push_back(*bf);
      r.add(m, k);
    }
    return r;
  }
  r.add(Monomial{{Factor{i, c, n}}}, Scalar(1L));
  return r;
}

inline Element nc_pow(const Element& a, int n) {
  if (n < 0) throw std::invalid_argument("nc_pow: nonnegative exponents only");
  Element r = Element::unit(a.spec);
  for (int i = 0; i < n; ++i) r = nc_mul(r, a);
  return r;
}

// Merge a same-generator factor list into canonical form (public operation).
inline Element partial_fraction_merge(const AlgebraSpec& spec,
                                      const std::vector<Factor>& factors) {
  if (factors.empty()) return Element::unit(spec);
  int gen = factors.front().gen;
  for (const auto& f : factors) {
    Element::check_gen(spec, f.gen);
    if (f.gen != gen) throw std::invalid_argument("factors must share one generator");
    if (f.exp == 0) throw ZeroPower();
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].shift == factors[j].shift) throw ShiftCollision();
  auto basis = nf::single_gen_product(gen, factors);
  Element r(spec);
  for (const auto& [bf, c] : basis) {
    Monomial m;
    if (bf) m.factors.push_back(*bf);
    r.add(m, c);
  }
  return r;
}

// Defining commutator [f_i, f_j] from the table, as an Element.
inline Element table_commutator(const AlgebraSpec& spec, int i, int j) {
  Element::check_gen(spec, i);
  Element::check_gen(spec, j);
  if (i == j) return Element::zero(spec);
  bool flip = i < j;
  int hi = flip ? j : i, lo = flip ? i : j;
  auto comm = spec.comm(hi, lo);
  Element r(spec);
  switch (comm.kind) {
    case AlgebraSpec::CommKind::Zero:
      return r;
    case AlgebraSpec::CommKind::Central:
      r = Element::unit(spec, Scalar(Rat(comm.q)) * Scalar::hbar());
      break;
    case AlgebraSpec::CommKind::PiiSpecial:
      r = Element::generator(spec, 2).scaled(Scalar(2L) * Scalar::hbar());
      break;
  }
  return flip ? -r : r;  // table gives [f_hi, f_lo]
}

inline bool is_central(const Element& a) {
  for (int i = 0; i < a.spec.num_gens(); ++i) {
    if (!nc_commutator(a, Element::generator(a.spec, i)).is_zero()) return false;
  }
  return true;
}

// Replace f_i by r throughout a (positive occurrences only).
inline Element subst_generator(const Element& a, int i, const Element& r) {
  if (!(a.spec == r.spec)) throw AlgebraMismatch();
  Element::check_gen(a.spec, i);
  std::vector<Element> pow_cache{Element::unit(a.spec)};
  auto rpow = [&](int e) {
    while (static_cast<int>(pow_cache.size()) <= e)
      pow_cache.push_back(nc_mul(pow_cache.back(), r));
    return pow_cache[static_cast<std::size_t>(e)];
  };
  Element out(a.spec);
  for (const auto& [w, c] : a.terms) {
    Element acc = Element::unit(a.spec, c);
    for (const Factor& f : w.factors) {
      if (f.gen == i) {
        if (f.exp < 0) throw InverseObstruction();
        acc = nc_mul(acc, rpow(f.exp));
      } else {
        Element single(a.spec);
        single.add(Monomial{{f}}, Scalar(1L));
        acc = nc_mul(acc, single);
      }
    }
    out += acc;
  }
  return out;
}

inline bool check_substitution_consistency(const AlgebraSpec& spec, int i,
                                           const Element& r) {
  for (int j = 0; j < spec.num_gens(); ++j) {
    if (j == i) continue;
    Element want = table_commutator(spec, i, j);
    Element got = nc_commutator(r, Element::generator(spec, j));
    if (!(got == want)) return false;
  }
  return true;
}

// Apply a scalar substitution to every coefficient and shift, renormalizing.
inline Element subst_scalars(const Element& a, const std::map<Sym, Scalar>& map) {
  Element out(a.spec);
  for (const auto& [w, c] : a.terms) {
    Element acc = Element::unit(a.spec, c.subst(map));
    for (const Factor& f : w.factors) {
      Scalar ns = f.shift.subst(map);
      acc = nc_mul(acc, inv_power(a.spec, f.gen, ns, f.exp));
    }
    out += acc;
  }
  return out;
}

inline Element at_hbar_zero(const Element& a) {
  return subst_scalars(a, {{Sym::hbar(), Scalar()}});
}

}  // namespace qpain
