#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "cliffbreak/algebra.hpp"
#include "cliffbreak/rational.hpp"

namespace cliffbreak {

/// One basis monomial: a coefficient-ring unit times a basis blade.
struct MonomialKey {
  std::uint8_t unit = 0;
  BladeMask mask = 0;
  auto operator<=>(const MonomialKey&) const = default;
};

/// Sparse element of the algebra fixed by its descriptor.
/// Canonical form: the term map holds no zero coefficients.
class Multivector {
public:
  explicit Multivector(AlgebraDescriptor desc) : desc_(desc) {}

  static Multivector zero(const AlgebraDescriptor& d) { return Multivector(d); }
  static Multivector scalar(const AlgebraDescriptor& d, const Rational& c);
  static Multivector one(const AlgebraDescriptor& d) { return scalar(d, 1); }
  static Multivector blade(const AlgebraDescriptor& d, BladeMask mask, const Rational& c = 1,
                           std::uint8_t unit = 0);
  static Multivector generator(const AlgebraDescriptor& d, int idx);
  static Multivector ring_unit(const AlgebraDescriptor& d, std::uint8_t unit);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  const std::map<MonomialKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const MonomialKey& k) const;
  Rational scalar_part() const { return coeff(MonomialKey{0, 0}); }

  /// Adds c to the coefficient at key k, dropping the term if it cancels.
  void add_term(const MonomialKey& k, const Rational& c);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(Multivector a, const Rational& c) { return a.scale(c); }
  friend Multivector operator*(const Rational& c, Multivector a) { return a.scale(c); }
  Multivector& scale(const Rational& c);

  Multivector reverse() const;
  Multivector grade_involution() const;
  Multivector grade_project(int k) const;

  bool operator==(const Multivector& o) const { return desc_ == o.desc_ && terms_ == o.terms_; }

  /// Deterministic human-readable form, e.g. "1/2 + 1/2*g5" or "-k*g0*g1".
  std::string str() const;

private:
  void require_same(const Multivector& o) const;

  AlgebraDescriptor desc_;
  std::map<MonomialKey, Rational> terms_;
};

Multivector commutator(const Multivector& a, const Multivector& b);
Multivector anticommutator(const Multivector& a, const Multivector& b);
Multivector square(const Multivector& a);

}  // namespace cliffbreak
