#pragma once

#include <cstdint>
#include <map>

#include "cliffbreak/linalg.hpp"
#include "cliffbreak/multivector.hpp"

namespace cliffbreak {

/// Multivector with double coefficients; only exponentials and the numeric
/// spin checks live here — all algebraic verification stays exact.
struct FloatMultivector {
  AlgebraDescriptor desc;
  std::map<MonomialKey, double> terms;

  static FloatMultivector zero(const AlgebraDescriptor& d) { return {d, {}}; }
  static FloatMultivector one(const AlgebraDescriptor& d) { return {d, {{MonomialKey{0, 0}, 1.0}}}; }
  static FloatMultivector from_exact(const Multivector& m);

  double coeff(const MonomialKey& k) const;
  double max_abs() const;
  void add_term(const MonomialKey& k, double c);
  FloatMultivector scaled(double c) const;
  FloatMultivector reverse() const;

  friend FloatMultivector operator+(const FloatMultivector& a, const FloatMultivector& b);
  friend FloatMultivector operator-(const FloatMultivector& a, const FloatMultivector& b);
  friend FloatMultivector operator*(const FloatMultivector& a, const FloatMultivector& b);
};

/// Scaling-and-squaring power series: x is halved until its largest
/// coefficient is at most 1/2, the series runs until the tail passes the
/// relative tolerance, then the result is squared back up.
/// Throws Nonconvergence past the term cap.
FloatMultivector exp_float(const FloatMultivector& x, double tol);

/// Conjugation test for g = exp(b): for `trials` random vectors v in the
/// invariant subspace, g*v*g^-1 must stay in the subspace within tol and
/// preserve the scalar part of v*v. When b is purely grade-2, reverse(g)
/// must also invert g within tol. The default subspace is the grade-1 span.
bool spin_action_check(const Multivector& b, int trials, double tol, std::uint64_t seed);
bool spin_action_check(const Multivector& b, int trials, double tol, std::uint64_t seed,
                       const SubspaceBasis& invariant);

}  // namespace cliffbreak
