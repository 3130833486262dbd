#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cliffbreak/rational.hpp"

namespace cliffbreak {

enum class ErrorCode {
  DescriptorMismatch,
  NotUnital,
  NotSemisimple,
  NotClosed,
  NotInvolution,
  NotCentral,
  InvalidGenerators,
  Nonconvergence,
  UndefinedSymbol,
  RingMismatch,
  DivisionByZero,
  InvalidArgument,
  UnsupportedStructure,
};

const char* error_code_name(ErrorCode c);

class EngineError : public std::runtime_error {
public:
  EngineError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Metric signature (p, q): p generators squaring to +1, then q squaring to -1.
struct Signature {
  int plus = 0;
  int minus = 0;

  static constexpr int kMaxGenerators = 12;

  int count() const { return plus + minus; }
  /// +1 or -1 for generator index 0..count-1. Indices < plus square to +1.
  int metric_sign(int idx) const { return idx < plus ? +1 : -1; }
  bool operator==(const Signature&) const = default;
};

enum class Ring : std::uint8_t { Real = 0, Complex = 1, Quaternion = 2 };

inline int unit_count(Ring r) {
  switch (r) {
    case Ring::Real: return 1;
    case Ring::Complex: return 2;
    default: return 4;
  }
}

/// Coefficient-ring unit indices: 0 = 1, 1 = i, 2 = j, 3 = k.
struct UnitProduct {
  int sign;
  std::uint8_t unit;
};

/// Quaternion unit table; the Real/Complex rings are the obvious subtables.
UnitProduct unit_mul(std::uint8_t a, std::uint8_t b);
const char* unit_name(std::uint8_t u);

/// Basis blade as a bitmask over generator indices; grade = popcount.
using BladeMask = std::uint32_t;

int blade_grade(BladeMask m);

struct BladeProduct {
  int sign;
  BladeMask mask;
};

/// Product of two basis blades. The sign combines the transposition count
/// needed to interleave b into a with the metric signs of shared indices.
BladeProduct blade_product(const Signature& sig, BladeMask a, BladeMask b);

enum class Context : std::uint8_t { Generic, Dirac };

/// Fixes the monomial universe: signature, coefficient ring and symbol style.
/// Generic contexts name generators e1..en; the Dirac context is Cl(1,3)
/// with g0..g3 plus the derived g5 = i*g0*g1*g2*g3.
struct AlgebraDescriptor {
  Signature sig;
  Ring ring = Ring::Real;
  Context ctx = Context::Generic;

  static AlgebraDescriptor generic(int p, int q, Ring r = Ring::Real);
  static AlgebraDescriptor dirac_c();
  static AlgebraDescriptor dirac_h();

  int gen_count() const { return sig.count(); }
  int units() const { return unit_count(ring); }
  long real_dim() const { return static_cast<long>(units()) << gen_count(); }
  int metric_sign(int idx) const { return sig.metric_sign(idx); }

  std::string name() const;
  std::string gen_symbol(int idx) const;

  bool operator==(const AlgebraDescriptor&) const = default;
};

/// Parses "dirac-c", "dirac-h", "cl(p,q)", "cl(p,q):r|c|h".
AlgebraDescriptor parse_algebra(const std::string& text);

}  // namespace cliffbreak
