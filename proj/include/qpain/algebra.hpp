#pragma once

#include <stdexcept>
#include <string>

#include "qpain/scalar.hpp"

namespace qpain {

// The two algebra families of the engine.
//   PII:   [f1,f0] = 2*hbar*f2,  [f0,f2] = [f2,f1] = hbar       (3 generators)
//   AL(l): [fi,f_{i+1}] = hbar cyclically, others commute       (l+1 generators)
struct AlgebraSpec {
  enum class Family { PII, AL };
  Family family;
  int l;

  static AlgebraSpec pii() { return {Family::PII, 2}; }
  static AlgebraSpec al(int l) {
    if (l < 2) throw std::invalid_argument("AL(l) requires l >= 2");
    return {Family::AL, l};
  }
  int num_gens() const { return family == Family::PII ? 3 : l + 1; }
  bool is_pii() const { return family == Family::PII; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) = default;

  std::string name() const {
    return is_pii() ? "pii" : ("al:" + std::to_string(l));
  }

  // Classification of [f_hi, f_lo] for hi > lo.
  enum class CommKind { Zero, Central, PiiSpecial };
  struct Comm {
    CommKind kind;
    int q;  // [f_hi, f_lo] = q * hbar when central
  };
  Comm comm(int hi, int lo) const {
    if (is_pii()) {
      if (hi == 1 && lo == 0) return {CommKind::PiiSpecial, 0};
      if (hi == 2 && lo == 0) return {CommKind::Central, -1};  // [f2,f0] = -hbar
      if (hi == 2 && lo == 1) return {CommKind::Central, +1};  // [f2,f1] = +hbar
      throw std::logic_error("bad PII pair");
    }
    if (hi == lo + 1) return {CommKind::Central, -1};       // [f_{i+1},f_i] = -hbar
    if (lo == 0 && hi == l) return {CommKind::Central, +1}; // [f_l,f_0] = +hbar
    return {CommKind::Zero, 0};
  }
};

}  // namespace qpain
