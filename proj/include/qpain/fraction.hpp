#pragma once

#include <vector>

#include "qpain/backlund.hpp"

namespace qpain {

namespace fraction {

inline bool has_negative_power(const Element& e) {
  for (const auto& [m, c] : e.terms)
    for (const Factor& f : m.factors)
      if (f.exp < 0) return true;
  return false;
}

inline int max_inverse_depth(const Element& e, int gen) {
  int k = 0;
  for (const auto& [m, c] : e.terms)
    for (const Factor& f : m.factors)
      if (f.gen == gen && f.exp < 0) k = std::max(k, -f.exp);
  return k;
}

}  // namespace fraction

// Joint right fraction state: value_j = num[j] * den^{-1}, all polynomial.
// Applying a letter substitutes homomorphically (images stay in the
// single-generator Laurent fragment) and clears the introduced inverse
// powers by a common right factor f_i^k.
struct RightFractionState {
  AlgebraSpec spec;
  std::vector<Element> nums;
  Element den;

  static RightFractionState from_elements(const AlgebraSpec& spec,
                                          const std::vector<Element>& values) {
    RightFractionState st{spec, values, Element::unit(spec)};
    return st;
  }

  void apply_letter_inplace(const Letter& l) {
    std::vector<Element> imgs;
    imgs.reserve(nums.size() + 1);
    for (const auto& n : nums) imgs.push_back(apply_letter(n, l));
    imgs.push_back(apply_letter(den, l));
    if (l.kind == Letter::Kind::S) {
      Element fi = Element::generator(spec, l.i);
      bool dirty = true;
      int guard = 0;
      // multiply on the right by f_i until every entry is polynomial
      int k0 = 0;
      for (const auto& e : imgs) k0 = std::max(k0, fraction::max_inverse_depth(e, l.i));
      for (int k = 0; k < k0; ++k)
        for (auto& e : imgs) e = nc_mul(e, fi);
      while (dirty) {
        dirty = false;
        for (const auto& e : imgs)
          if (fraction::has_negative_power(e)) dirty = true;
        if (!dirty) break;
        if (++guard > 64) throw std::logic_error("fraction clearing did not terminate");
        for (auto& e : imgs) e = nc_mul(e, fi);
      }
    }
    den = imgs.back();
    imgs.pop_back();
    nums = std::move(imgs);
    if (den.is_zero()) throw std::logic_error("fraction denominator vanished");
  }

  void apply_word(const TransformWord& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_letter_inplace(*it);
  }
};

// Joint left fraction state: value_j = den^{-1} * num[j].
struct LeftFractionState {
  AlgebraSpec spec;
  std::vector<Element> nums;
  Element den;

  static LeftFractionState from_elements(const AlgebraSpec& spec,
                                         const std::vector<Element>& values) {
    LeftFractionState st{spec, values, Element::unit(spec)};
    return st;
  }

  void apply_letter_inplace(const Letter& l) {
    std::vector<Element> imgs;
    imgs.reserve(nums.size() + 1);
    for (const auto& n : nums) imgs.push_back(apply_letter(n, l));
    imgs.push_back(apply_letter(den, l));
    if (l.kind == Letter::Kind::S) {
      Element fi = Element::generator(spec, l.i);
      int k0 = 0;
      for (const auto& e : imgs) k0 = std::max(k0, fraction::max_inverse_depth(e, l.i));
      for (int k = 0; k < k0; ++k)
        for (auto& e : imgs) e = nc_mul(fi, e);
      int guard = 0;
      while (true) {
        bool dirty = false;
        for (const auto& e : imgs)
          if (fraction::has_negative_power(e)) dirty = true;
        if (!dirty) break;
        if (++guard > 64) throw std::logic_error("fraction clearing did not terminate");
        for (auto& e : imgs) e = nc_mul(fi, e);
      }
    }
    den = imgs.back();
    imgs.pop_back();
    nums = std::move(imgs);
    if (den.is_zero()) throw std::logic_error("fraction denominator vanished");
  }

  void apply_word(const TransformWord& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_letter_inplace(*it);
  }
};

}  // namespace qpain
