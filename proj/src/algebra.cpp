#include "cliffbreak/algebra.hpp"

#include <bit>
#include <cctype>

namespace cliffbreak {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DescriptorMismatch: return "DESCRIPTOR_MISMATCH";
    case ErrorCode::NotUnital: return "NOT_UNITAL";
    case ErrorCode::NotSemisimple: return "NOT_SEMISIMPLE";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::NotInvolution: return "NOT_INVOLUTION";
    case ErrorCode::NotCentral: return "NOT_CENTRAL";
    case ErrorCode::InvalidGenerators: return "INVALID_GENERATORS";
    case ErrorCode::Nonconvergence: return "NONCONVERGENCE";
    case ErrorCode::UndefinedSymbol: return "UNDEFINED_SYMBOL";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::UnsupportedStructure: return "UNSUPPORTED_STRUCTURE";
  }
  return "UNKNOWN";
}

namespace {

// unit_out[a][b], sign_out[a][b] for unit indices 0..3 = 1, i, j, k.
// ij = k, jk = i, ki = j, squares of i, j, k are -1.
constexpr std::uint8_t kUnitOut[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr int kUnitSign[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

UnitProduct unit_mul(std::uint8_t a, std::uint8_t b) {
  return {kUnitSign[a][b], kUnitOut[a][b]};
}

const char* unit_name(std::uint8_t u) {
  switch (u) {
    case 1: return "i";
    case 2: return "j";
    case 3: return "k";
    default: return "";
  }
}

int blade_grade(BladeMask m) { return std::popcount(m); }

BladeProduct blade_product(const Signature& sig, BladeMask a, BladeMask b) {
  int swaps = 0;
  for (BladeMask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  int sign = (swaps & 1) ? -1 : +1;
  for (BladeMask common = a & b; common != 0; common &= common - 1) {
    sign *= sig.metric_sign(std::countr_zero(common));
  }
  return {sign, a ^ b};
}

AlgebraDescriptor AlgebraDescriptor::generic(int p, int q, Ring r) {
  if (p < 0 || q < 0 || p + q > Signature::kMaxGenerators) {
    throw EngineError(ErrorCode::InvalidArgument, "signature out of range");
  }
  return AlgebraDescriptor{Signature{p, q}, r, Context::Generic};
}

AlgebraDescriptor AlgebraDescriptor::dirac_c() {
  return AlgebraDescriptor{Signature{1, 3}, Ring::Complex, Context::Dirac};
}

AlgebraDescriptor AlgebraDescriptor::dirac_h() {
  return AlgebraDescriptor{Signature{1, 3}, Ring::Quaternion, Context::Dirac};
}

std::string AlgebraDescriptor::name() const {
  if (ctx == Context::Dirac) return ring == Ring::Quaternion ? "dirac-h" : "dirac-c";
  std::string s = "cl(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + ")";
  if (ring == Ring::Complex) s += ":c";
  if (ring == Ring::Quaternion) s += ":h";
  return s;
}

std::string AlgebraDescriptor::gen_symbol(int idx) const {
  if (ctx == Context::Dirac) return "g" + std::to_string(idx);
  return "e" + std::to_string(idx + 1);
}

AlgebraDescriptor parse_algebra(const std::string& text) {
  if (text == "dirac-c") return AlgebraDescriptor::dirac_c();
  if (text == "dirac-h") return AlgebraDescriptor::dirac_h();
  // cl(p,q) with optional :r/:c/:h suffix
  const auto bad = [&] {
    return EngineError(ErrorCode::InvalidArgument,
                       "unknown algebra '" + text + "' (want dirac-c, dirac-h or cl(p,q)[:r|c|h])");
  };
  if (text.rfind("cl(", 0) != 0) throw bad();
  const auto close = text.find(')');
  const auto comma = text.find(',');
  if (close == std::string::npos || comma == std::string::npos || comma > close) throw bad();
  int p = 0, q = 0;
  try {
    size_t used = 0;
    p = std::stoi(text.substr(3, comma - 3), &used);
    if (used != comma - 3) throw bad();
    q = std::stoi(text.substr(comma + 1, close - comma - 1), &used);
    if (used != close - comma - 1) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  Ring ring = Ring::Real;
  const std::string tail = text.substr(close + 1);
  if (tail == ":r" || tail.empty()) {
    ring = Ring::Real;
  } else if (tail == ":c") {
    ring = Ring::Complex;
  } else if (tail == ":h") {
    ring = Ring::Quaternion;
  } else {
    throw bad();
  }
  return AlgebraDescriptor::generic(p, q, ring);
}

}  // namespace cliffbreak
