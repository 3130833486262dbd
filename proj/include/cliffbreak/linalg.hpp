#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cliffbreak/multivector.hpp"

namespace cliffbreak {

/// Dense column index of a monomial: unit-major, mask-minor.
using Col = std::uint32_t;

Col key_to_col(const AlgebraDescriptor& d, const MonomialKey& k);
MonomialKey col_to_key(const AlgebraDescriptor& d, Col c);

/// Sparse rational vector, terms sorted by column, no zero entries.
struct SparseVec {
  std::vector<std::pair<Col, Rational>> terms;

  bool empty() const { return terms.empty(); }
  Col leading_col() const { return terms.front().first; }
  const Rational& leading_coeff() const { return terms.front().second; }
  Rational at(Col c) const;
  void scale(const Rational& c);
  /// this += c * other
  void axpy(const Rational& c, const SparseVec& other);
  bool operator==(const SparseVec&) const = default;
};

SparseVec to_sparse(const Multivector& m);
Multivector from_sparse(const AlgebraDescriptor& d, const SparseVec& v);

/// Online row-echelon accumulator over sparse rational rows.
/// Rows may be inserted in any order; finalize() produces the unique RREF.
class RowReducer {
public:
  /// Reduces v against current pivots and stores it if independent.
  /// Returns true when the rank grew.
  bool insert(SparseVec v);
  int rank() const { return static_cast<int>(pivots_.size()); }
  /// Reduces v against current pivots without storing; returns the residue.
  SparseVec reduce(SparseVec v) const;
  /// Unique reduced row-echelon basis, rows sorted by leading column.
  std::vector<SparseVec> finalize() const;

private:
  std::map<Col, SparseVec> pivots_;
};

/// Subspace in reduced row-echelon form; rows are multivectors.
class SubspaceBasis {
public:
  explicit SubspaceBasis(AlgebraDescriptor d) : desc_(d) {}
  SubspaceBasis(AlgebraDescriptor d, std::vector<Multivector> rref_rows)
      : desc_(d), rows_(std::move(rref_rows)) {}

  const AlgebraDescriptor& descriptor() const { return desc_; }
  const std::vector<Multivector>& rows() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const Multivector& x) const;
  /// Coordinates of x in this basis, or nothing when x is outside the span.
  std::optional<std::vector<Rational>> coordinates(const Multivector& x) const;

  bool operator==(const SubspaceBasis& o) const {
    return desc_ == o.desc_ && rows_ == o.rows_;
  }

private:
  AlgebraDescriptor desc_;
  std::vector<Multivector> rows_;
};

SubspaceBasis echelonize(const AlgebraDescriptor& d, const std::vector<Multivector>& vecs);
/// All monomials of the descriptor (the full algebra as a subspace).
SubspaceBasis full_basis(const AlgebraDescriptor& d);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Largest subspace of ambient commuting with every constraint:
/// the exact null space of the stacked commutator maps.
SubspaceBasis commutant(const std::vector<Multivector>& constraints, const SubspaceBasis& ambient);

/// Two-sided identity of S if one exists (solved linearly, then verified).
std::optional<Multivector> internal_unit(const SubspaceBasis& s);

struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  bool operator==(const Inertia&) const = default;
};

struct SymmetricForm {
  std::vector<std::vector<Rational>> mat;
};

/// Sylvester inertia of a symmetric rational matrix, computed by exact
/// congruence reduction with diagonal pivoting. A zero-diagonal block with a
/// nonzero off-diagonal entry contributes one plus and one minus.
Inertia inertia_of(SymmetricForm form);

}  // namespace cliffbreak
