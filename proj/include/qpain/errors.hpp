#pragma once

#include <stdexcept>
#include <string>

namespace qpain {

struct AlgebraMismatch : std::logic_error {
  AlgebraMismatch() : std::logic_error("AlgebraMismatch") {}
};
struct ZeroPower : std::invalid_argument {
  ZeroPower() : std::invalid_argument("ZeroPower: use the unit element for n = 0") {}
};
struct ShiftCollision : std::invalid_argument {
  ShiftCollision() : std::invalid_argument("ShiftCollision: combine equal-shift powers first") {}
};
struct InverseObstruction : std::domain_error {
  InverseObstruction()
      : std::domain_error("InverseObstruction: substituted generator occurs inverted") {}
};
struct NormalOrderDivergence : std::domain_error {
  NormalOrderDivergence()
      : std::domain_error(
            "NormalOrderDivergence: product of inverse powers of a non-commuting pair "
            "has no finite normal form") {}
};
struct NonInvertibleImage : std::domain_error {
  explicit NonInvertibleImage(const std::string& what)
      : std::domain_error("NonInvertibleImage: " + what) {}
};
struct DerivationFailure : std::runtime_error {
  explicit DerivationFailure(const std::string& what)
      : std::runtime_error("DerivationFailure: " + what) {}
};
struct UnsupportedFormat : std::invalid_argument {
  explicit UnsupportedFormat(const std::string& what)
      : std::invalid_argument("UnsupportedFormat: " + what) {}
};
struct SyntaxError : std::invalid_argument {
  int line, col;
  SyntaxError(const std::string& what, int line_, int col_)
      : std::invalid_argument("SyntaxError at " + std::to_string(line_) + ":" +
                              std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};
struct IndexOutOfRange : std::invalid_argument {
  explicit IndexOutOfRange(const std::string& what)
      : std::invalid_argument("IndexOutOfRange: " + what) {}
};
struct InvalidInverse : std::invalid_argument {
  InvalidInverse()
      : std::invalid_argument("InvalidInverse: inv() takes a generator with an optional "
                              "central shift") {}
};

}  // namespace qpain
