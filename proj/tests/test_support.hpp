#pragma once

#include <cstdint>
#include <vector>

#include "qpain/element.hpp"

namespace qpain::testsupport {

// Deterministic xorshift64* generator for reproducible property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
 private:
  std::uint64_t state_;
};

inline Scalar random_scalar(Rng& rng, int l, int max_deg = 2, bool with_den = false) {
  std::vector<Sym> pool{Sym::hbar(), Sym::t(), Sym::alpha(0), Sym::alpha(1 % (l + 1))};
  auto rand_poly = [&](int deg) {
    Poly p;
    int nterms = rng.range(1, 3);
    for (int i = 0; i < nterms; ++i) {
      Mono m;
      int d = rng.range(0, deg);
      for (int j = 0; j < d; ++j) {
        Sym s = pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
        m = m.times(Mono::var(s));
      }
      p.add_term(m, Rat(rng.range(-4, 4)));
    }
    return p;
  };
  Poly num = rand_poly(max_deg);
  if (!with_den) return Scalar(num, Poly(1L));
  Poly den;
  do {
    den = rand_poly(1);
  } while (den.is_zero());
  return Scalar(num, den);
}

inline Scalar random_nonzero_scalar(Rng& rng, int l, int max_deg = 2, bool with_den = false) {
  Scalar s;
  do {
    s = random_scalar(rng, l, max_deg, with_den);
  } while (s.is_zero());
  return s;
}

// Random element in the safe Laurent fragment: inverse powers are confined to
// the generator `inv_gen` (or absent when inv_gen < 0), everything else has
// nonnegative exponents.
inline Element random_element(Rng& rng, const AlgebraSpec& spec, int max_terms = 3,
                              int max_factors = 3, int inv_gen = -1,
                              bool shifted_inverses = false) {
  Element e(spec);
  int nterms = rng.range(1, max_terms);
  for (int i = 0; i < nterms; ++i) {
    Element word = Element::unit(spec, Scalar(Rat(rng.range(-3, 3))));
    int nf = rng.range(0, max_factors);
    for (int j = 0; j < nf; ++j) {
      int gen = rng.range(0, spec.num_gens() - 1);
      int exp;
      Scalar shift;
      if (gen == inv_gen && rng.range(0, 1) == 0) {
        exp = -rng.range(1, 2);
        if (shifted_inverses && rng.range(0, 1) == 0) shift = Scalar::t();
      } else {
        exp = rng.range(1, 2);
      }
      word = nc_mul(word, inv_power(spec, gen, shift, exp));
    }
    e += word;
  }
  return e;
}

}  // namespace qpain::testsupport
