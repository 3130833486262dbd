#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffbreak/linalg.hpp"
#include "cliffbreak/multivector.hpp"

namespace cliffbreak {

enum class DivisionRing : std::uint8_t { R, C, H };

const char* division_ring_name(DivisionRing d);
int division_ring_dim(DivisionRing d);

/// Structure-theorem verdict: `factors` copies of the n x n matrix algebra
/// over the division ring (factors is 1 or 2; the two copies are isomorphic).
struct IsoClass {
  int factors = 1;
  DivisionRing ring = DivisionRing::R;
  long matrix_size = 1;

  long real_dim() const { return factors * matrix_size * matrix_size * division_ring_dim(ring); }
  /// "M(8,R)", "H", "M(4,R) ⊕ M(4,R)", "H ⊕ H"
  std::string str() const;
  bool operator==(const IsoClass&) const = default;
};

/// Classification of the real algebra Cl(p,q) by (p-q) mod 8.
IsoClass classify_table(const Signature& sig);
/// Same with coefficients extended to the given ring (C⊗ / H⊗ tensor rules).
IsoClass classify_table(const Signature& sig, Ring ring);

/// Smallest product-closed subspace containing gens (and the ambient unit
/// when adjoin_unit); fixed point of span-then-multiply iteration.
SubspaceBasis generated_subalgebra(const std::vector<Multivector>& gens, bool adjoin_unit);

/// Span of the even-grade basis monomials (ring units count as grade 0).
SubspaceBasis even_part(const AlgebraDescriptor& d);

/// Regular trace form B[r][s] = trace of left multiplication by row_r * row_s
/// on S. Requires S closed under multiplication.
SymmetricForm trace_form(const SubspaceBasis& s);

/// Elements of S commuting with all of S.
SubspaceBasis center_of(const SubspaceBasis& s);

/// Splits S into the ideals (1±omega)/2 * S for a central involution omega.
/// Throws NotInvolution when omega² != 1, NotCentral when omega fails to
/// commute with S, InvalidArgument when omega is outside S.
std::pair<SubspaceBasis, SubspaceBasis> idempotent_split(const SubspaceBasis& s,
                                                         const Multivector& omega);

/// Identifies a unital product-closed subspace up to isomorphism from its
/// internal structure alone: central idempotents split off simple factors,
/// then the center dimension and the trace-form inertia pick the division
/// ring. Throws NotUnital, NotClosed, NotSemisimple, UnsupportedStructure.
IsoClass classify_empirical(const SubspaceBasis& s);

/// Outcome of checking a would-be Clifford generator frame.
struct GeneratorReport {
  explicit GeneratorReport(Multivector ps) : pseudoscalar(std::move(ps)) {}

  bool pairwise_anticommute = false;
  /// Per generator: +1/-1 when its square is that scalar, nullopt otherwise.
  std::vector<std::optional<int>> squares;
  /// Set only when all squares are ±1 scalars and all pairs anticommute.
  std::optional<Signature> signature;
  long generated_dimension = 0;
  bool full_algebra = false;
  /// Ordered product of the generators.
  Multivector pseudoscalar;
};

GeneratorReport verify_generators(const std::vector<Multivector>& gens);

/// If x == c * (unit * y) for a ring unit and rational c != 0, returns them.
std::optional<std::pair<std::uint8_t, Rational>> proportional_factor(const Multivector& x,
                                                                     const Multivector& y);

}  // namespace cliffbreak
