#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpain {

// Commutative coefficient symbols. Fixed order for canonical printing:
// HBAR < T < E < ALPHA(0) < ... < ALPHA(l) < X < Y.
enum class SymKind : std::uint8_t { Hbar = 0, T = 1, E = 2, Alpha = 3, X = 4, Y = 5 };

struct Sym {
  SymKind kind;
  int index = 0;  // alpha index, 0..l

  static Sym hbar() { return {SymKind::Hbar, 0}; }
  static Sym t() { return {SymKind::T, 0}; }
  static Sym e() { return {SymKind::E, 0}; }
  static Sym alpha(int i) {
    if (i < 0) throw std::invalid_argument("alpha index must be nonnegative");
    return {SymKind::Alpha, i};
  }
  static Sym x() { return {SymKind::X, 0}; }
  static Sym y() { return {SymKind::Y, 0}; }

  friend auto operator<=>(const Sym& a, const Sym& b) {
    // Alpha block sits between E and X; within the block order by index.
    auto rank = [](const Sym& s) {
      switch (s.kind) {
        case SymKind::Hbar: return 0;
        case SymKind::T: return 1;
        case SymKind::E: return 2;
        case SymKind::Alpha: return 3;
        case SymKind::X: return 4;
        case SymKind::Y: return 5;
      }
      return 6;
    };
    if (auto c = rank(a) <=> rank(b); c != 0) return c;
    return a.index <=> b.index;
  }
  friend bool operator==(const Sym& a, const Sym& b) = default;

  std::string name() const {
    switch (kind) {
      case SymKind::Hbar: return "hbar";
      case SymKind::T: return "t";
      case SymKind::E: return "E";
      case SymKind::Alpha: return "a" + std::to_string(index);
      case SymKind::X: return "x";
      case SymKind::Y: return "y";
    }
    return "?";
  }
  std::string latex() const {
    switch (kind) {
      case SymKind::Hbar: return "\\hbar";
      case SymKind::T: return "t";
      case SymKind::E: return "e^{t/2}";
      case SymKind::Alpha: return "\\alpha_{" + std::to_string(index) + "}";
      case SymKind::X: return "x";
      case SymKind::Y: return "y";
    }
    return "?";
  }
};

}  // namespace qpain
