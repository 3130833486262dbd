#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffbreak/linalg.hpp"
#include "cliffbreak/multivector.hpp"

namespace cliffbreak {

/// Lie subalgebra (under the commutator) with exact structure constants:
/// [row_r, row_s] = sum_t structure[r][s][t] * row_t.
struct LieBasis {
  SubspaceBasis basis;
  std::vector<std::vector<std::vector<Rational>>> structure;

  int dimension() const { return basis.rank(); }
};

/// Closure of the elements under commutator (fixed point of span-and-bracket).
LieBasis lie_closure(const std::vector<Multivector>& elements);

/// Lie algebra spanned by the products gens[a]*gens[b] (a < b) of a valid
/// Clifford generator frame. Throws InvalidGenerators when the frame fails
/// the anticommutation or unit-square checks.
LieBasis bivector_algebra(const std::vector<Multivector>& gens);

/// Killing form K[r][s] = trace(ad row_r ∘ ad row_s) from structure constants.
SymmetricForm killing_form(const LieBasis& l);

struct RealFormVerdict {
  int dimension = 0;
  Inertia inertia;
  /// Catalogue name such as "sl(4,R)"; empty when the (dimension, inertia)
  /// pair is not catalogued.
  std::optional<std::string> name;
};

RealFormVerdict killing_verdict(const LieBasis& l);

}  // namespace cliffbreak
