#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpain/element.hpp"
#include "qpain/flows.hpp"
#include "qpain/printer.hpp"

namespace qpain {

// One letter of a transform word.
struct Letter {
  enum class Kind { S, Pi, PiInv };
  Kind kind;
  int i = 0;  // reflection index for Kind::S

  static Letter s(int i) { return {Kind::S, i}; }
  static Letter pi() { return {Kind::Pi, 0}; }
  static Letter pi_inv() { return {Kind::PiInv, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::S: return "s" + std::to_string(i);
      case Kind::Pi: return "p";
      case Kind::PiInv: return "p~";
    }
    return "?";
  }
};

// Rightmost letter acts first.
using TransformWord = std::vector<Letter>;

inline std::string word_name(const TransformWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += l.name();
  }
  return s;
}

namespace backlund {

inline int u_entry(const AlgebraSpec& spec, int i, int j) {
  const int n = spec.num_gens();
  if (j == (i + 1) % n) return 1;
  if (j == (i - 1 + n) % n) return -1;
  return 0;
}
inline int a_entry(const AlgebraSpec& spec, int i, int j) {
  const int n = spec.num_gens();
  if (i == j) return 2;
  if (j == (i + 1) % n || j == (i - 1 + n) % n) return -1;
  return 0;
}

// Generator image under a single letter, normal ordered.
inline Element letter_image(const AlgebraSpec& spec, const Letter& l, int j) {
  auto f = [&](int g) { return Element::generator(spec, g); };
  if (spec.is_pii()) {
    Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1);
    switch (l.kind) {
      case Letter::Kind::Pi:
      case Letter::Kind::PiInv:
        if (j == 0) return f(1);
        if (j == 1) return f(0);
        return -f(2);
      case Letter::Kind::S:
        if (l.i == 0) {
          Element inv = inv_power(spec, 0, Scalar(), -1);
          if (j == 0) return f(0);
          if (j == 2) return f(2) + inv.scaled(a0);
          // s0(f1) = f1 - f2 (a0/f0) - (a0/f0) f2 - a0^2/f0^2
          return f(1) - nc_mul(f(2), inv).scaled(a0) - nc_mul(inv, f(2)).scaled(a0) -
                 inv_power(spec, 0, Scalar(), -2).scaled(a0 * a0);
        }
        {
          Element inv = inv_power(spec, 1, Scalar(), -1);
          if (j == 1) return f(1);
          if (j == 2) return f(2) - inv.scaled(a1);
          // s1(f0) = f0 + f2 (a1/f1) + (a1/f1) f2 - a1^2/f1^2
          return f(0) + nc_mul(f(2), inv).scaled(a1) + nc_mul(inv, f(2)).scaled(a1) -
                 inv_power(spec, 1, Scalar(), -2).scaled(a1 * a1);
        }
    }
  }
  const int n = spec.num_gens();
  switch (l.kind) {
    case Letter::Kind::Pi:
      return f((j + 1) % n);
    case Letter::Kind::PiInv:
      return f((j - 1 + n) % n);
    case Letter::Kind::S: {
      int u = u_entry(spec, l.i, j);
      if (u == 0) return f(j);
      return f(j) +
             inv_power(spec, l.i, Scalar(), -1).scaled(Scalar::alpha(l.i) * Scalar(Rat(u)));
    }
  }
  return f(j);
}

// The induced substitution on coefficient symbols.
inline std::map<Sym, Scalar> letter_param_map(const AlgebraSpec& spec, const Letter& l) {
  std::map<Sym, Scalar> m;
  const int n = spec.num_gens();
  if (spec.is_pii()) {
    Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1);
    switch (l.kind) {
      case Letter::Kind::Pi:
      case Letter::Kind::PiInv:
        m[Sym::alpha(0)] = a1;
        m[Sym::alpha(1)] = a0;
        return m;
      case Letter::Kind::S:
        if (l.i == 0) {
          m[Sym::alpha(0)] = -a0;
          m[Sym::alpha(1)] = a1 + Scalar(2L) * a0;
        } else {
          m[Sym::alpha(0)] = a0 + Scalar(2L) * a1;
          m[Sym::alpha(1)] = -a1;
        }
        return m;
    }
  }
  switch (l.kind) {
    case Letter::Kind::Pi:
      for (int j = 0; j < n; ++j) m[Sym::alpha(j)] = Scalar::alpha((j + 1) % n);
      if (spec.l == 3) {
        m[Sym::x()] = Scalar::sy();
        m[Sym::y()] = Scalar::sx();
      }
      return m;
    case Letter::Kind::PiInv:
      for (int j = 0; j < n; ++j) m[Sym::alpha(j)] = Scalar::alpha((j - 1 + n) % n);
      if (spec.l == 3) {
        m[Sym::x()] = Scalar::sy();
        m[Sym::y()] = Scalar::sx();
      }
      return m;
    case Letter::Kind::S:
      for (int j = 0; j < n; ++j) {
        int a = a_entry(spec, l.i, j);
        if (a == 0) continue;
        m[Sym::alpha(j)] =
            Scalar::alpha(j) - Scalar::alpha(l.i) * Scalar(Rat(a));
      }
      return m;
  }
  return m;
}

// Pattern match e = q * f_g + s with scalar q != 0, central s: the invertible
// shifted-power fragment of images.
struct AffineImage {
  int gen;
  Scalar coeff;
  Scalar offset;
};
inline std::optional<AffineImage> as_affine_generator(const Element& e) {
  AffineImage out{-1, Scalar(), Scalar()};
  for (const auto& [m, c] : e.terms) {
    if (m.is_unit()) {
      out.offset = c;
      continue;
    }
    if (m.factors.size() != 1) return std::nullopt;
    const Factor& f = m.factors.front();
    if (f.exp != 1 || !f.shift.is_zero()) return std::nullopt;
    if (out.gen >= 0) return std::nullopt;
    out.gen = f.gen;
    out.coeff = c;
  }
  if (out.gen < 0) return std::nullopt;
  return out;
}

}  // namespace backlund

// Apply one letter homomorphically; refuses on inverse factors whose image
// leaves the shifted-power fragment.
inline Element apply_letter(const Element& a, const Letter& l) {
  const AlgebraSpec& spec = a.spec;
  auto pmap = backlund::letter_param_map(spec, l);
  std::vector<Element> gen_img;
  for (int g = 0; g < spec.num_gens(); ++g)
    gen_img.push_back(backlund::letter_image(spec, l, g));
  Element out = Element::zero(spec);
  for (const auto& [w, c] : a.terms) {
    Element acc = Element::unit(spec, c.subst(pmap));
    for (const Factor& f : w.factors) {
      const Element& img = gen_img[static_cast<std::size_t>(f.gen)];
      Scalar shift_img = f.shift.subst(pmap);
      if (f.exp > 0) {
        Element base = img - Element::unit(spec, shift_img);
        acc = nc_mul(acc, nc_pow(base, f.exp));
      } else {
        auto aff = backlund::as_affine_generator(img);
        if (!aff)
          throw NonInvertibleImage("image of f" + std::to_string(f.gen) +
                                   " under " + l.name() +
                                   " is not an invertible shifted power");
        // (q f_g + s - shift)^exp = q^exp (f_g - (shift - s)/q)^exp
        Scalar c2 = (shift_img - aff->offset) / aff->coeff;
        Scalar q = aff->coeff;
        Scalar qpow(1L);
        for (int k = 0; k < -f.exp; ++k) qpow = qpow * q;
        acc = nc_mul(acc, inv_power(spec, aff->gen, c2, f.exp).scaled(qpow.inv()));
      }
    }
    out += acc;
  }
  return out;
}

// Rightmost letter first.
inline Element apply_transform(const TransformWord& w, const Element& a) {
  Element e = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = apply_letter(e, *it);
  return e;
}

inline Scalar transform_params(const AlgebraSpec& spec, const TransformWord& w,
                               const Scalar& a, bool normalize_k = false) {
  Scalar s = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    s = s.subst(backlund::letter_param_map(spec, *it));
  if (normalize_k) {
    Scalar rest;
    int nalpha = spec.num_gens() - (spec.is_pii() ? 1 : 0);
    for (int j = 1; j < nalpha; ++j) rest += Scalar::alpha(j);
    s = s.subst({{Sym::alpha(0), Scalar(1L) - rest}});
  }
  return s;
}

inline TransformWord parse_word(const AlgebraSpec& spec, const std::string& text) {
  TransformWord w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == 'p') {
      ++i;
      if (i < text.size() && text[i] == '~') {
        w.push_back(Letter::pi_inv());
        ++i;
      } else {
        w.push_back(Letter::pi());
      }
    } else if (text[i] == 's') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw SyntaxError("expected index after 's'", 1, static_cast<int>(i) + 1);
      int idx = std::stoi(text.substr(start, i - start));
      if (idx >= spec.num_gens())
        throw IndexOutOfRange("letter s" + std::to_string(idx));
      w.push_back(Letter::s(idx));
    } else {
      throw SyntaxError(std::string("unexpected character '") + text[i] + "' in word", 1,
                        static_cast<int>(i) + 1);
    }
    skip_ws();
  }
  return w;
}

}  // namespace qpain
