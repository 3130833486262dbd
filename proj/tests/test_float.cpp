#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cliffbreak/floatmv.hpp"
#include "cliffbreak/linalg.hpp"
#include "cliffbreak/multivector.hpp"

using namespace cliffbreak;

namespace {

constexpr double kTol = 1e-9;

double dist_to(const FloatMultivector& a, const FloatMultivector& b) {
  return (a + b.scaled(-1.0)).max_abs();
}

}  // namespace

TEST_CASE("float layer mirrors exact arithmetic") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  const auto x = Multivector::generator(d, 0) * Rational(3, 4) + Multivector::one(d);
  const auto xf = FloatMultivector::from_exact(x);
  CHECK(xf.coeff(MonomialKey{0, 0}) == doctest::Approx(1.0));
  CHECK(xf.coeff(MonomialKey{0, 1}) == doctest::Approx(0.75));
  CHECK(xf.max_abs() == doctest::Approx(1.0));
  CHECK(dist_to(xf + xf.scaled(-1.0), FloatMultivector::zero(d)) == doctest::Approx(0.0));
  const auto y = FloatMultivector::from_exact(Multivector::blade(d, 0b11));
  CHECK(y.reverse().coeff(MonomialKey{0, 0b11}) == doctest::Approx(-1.0));
}

TEST_CASE("exponential of zero is the unit") {
  const auto d = AlgebraDescriptor::dirac_h();
  const auto e = exp_float(FloatMultivector::zero(d), 1e-13);
  CHECK(dist_to(e, FloatMultivector::one(d)) < 1e-12);
}

TEST_CASE("exponential of a half-turn plane bivector is minus one") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  FloatMultivector b = FloatMultivector::zero(d);
  b.add_term(MonomialKey{0, 0b11}, std::numbers::pi);
  const auto e = exp_float(b, 1e-13);
  CHECK(dist_to(e, FloatMultivector::one(d).scaled(-1.0)) < kTol);
}

TEST_CASE("exponential of the imaginary unit matches cosine and sine") {
  const auto d = AlgebraDescriptor::generic(0, 0, Ring::Complex);
  FloatMultivector b = FloatMultivector::zero(d);
  b.add_term(MonomialKey{1, 0}, 0.7);
  const auto e = exp_float(b, 1e-13);
  CHECK(e.coeff(MonomialKey{0, 0}) == doctest::Approx(std::cos(0.7)).epsilon(1e-10));
  CHECK(e.coeff(MonomialKey{1, 0}) == doctest::Approx(std::sin(0.7)).epsilon(1e-10));
}

TEST_CASE("argument reduction handles large inputs") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  FloatMultivector b = FloatMultivector::zero(d);
  b.add_term(MonomialKey{0, 0b11}, 100.0);
  const auto e = exp_float(b, 1e-13);
  CHECK(e.coeff(MonomialKey{0, 0}) == doctest::Approx(std::cos(100.0)).epsilon(1e-6));
  CHECK(e.coeff(MonomialKey{0, 0b11}) == doctest::Approx(std::sin(100.0)).epsilon(1e-6));
}

TEST_CASE("exponentials of opposite arguments invert each other") {
  const auto d = AlgebraDescriptor::dirac_h();
  const BladeMask planes[] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  std::mt19937_64 rng(0xF10A7u);
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> unit(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector x = Multivector::zero(d);
    for (const auto m : planes) {
      x = x + Multivector::blade(d, m, Rational(num(rng)), static_cast<std::uint8_t>(unit(rng)));
    }
    const auto xf = FloatMultivector::from_exact(x);
    const auto e = exp_float(xf, 1e-12);
    const auto einv = exp_float(xf.scaled(-1.0), 1e-12);
    CHECK(dist_to(e * einv, FloatMultivector::one(d)) < 1e-8);
  }
}

TEST_CASE("plane rotation closed form") {
  const auto d = AlgebraDescriptor::generic(1, 3, Ring::Real);
  const double theta = 0.6;
  FloatMultivector b = FloatMultivector::zero(d);
  b.add_term(MonomialKey{0, 0b0110}, theta / 2);  // plane of two minus-square directions
  const auto g = exp_float(b, 1e-13);
  const auto ginv = exp_float(b.scaled(-1.0), 1e-13);
  const auto v = FloatMultivector::from_exact(Multivector::generator(d, 1));
  const auto w = g * v * ginv;
  CHECK(w.coeff(MonomialKey{0, 0b0010}) == doctest::Approx(std::cos(theta)).epsilon(1e-10));
  CHECK(w.coeff(MonomialKey{0, 0b0100}) == doctest::Approx(std::sin(theta)).epsilon(1e-10));
}

TEST_CASE("hyperbolic boost closed form") {
  const auto d = AlgebraDescriptor::generic(1, 3, Ring::Real);
  const double phi = 0.8;
  FloatMultivector b = FloatMultivector::zero(d);
  b.add_term(MonomialKey{0, 0b0011}, phi / 2);  // mixed-square plane
  const auto g = exp_float(b, 1e-13);
  const auto ginv = exp_float(b.scaled(-1.0), 1e-13);
  const auto v = FloatMultivector::from_exact(Multivector::generator(d, 0));
  const auto w = g * v * ginv;
  CHECK(w.coeff(MonomialKey{0, 0b0001}) == doctest::Approx(std::cosh(phi)).epsilon(1e-10));
  CHECK(w.coeff(MonomialKey{0, 0b0010}) == doctest::Approx(-std::sinh(phi)).epsilon(1e-10));
}

TEST_CASE("conjugation by bivector exponentials preserves the vector span") {
  const auto d = AlgebraDescriptor::generic(1, 3, Ring::Real);
  CHECK(spin_action_check(Multivector::blade(d, 0b0110, Rational(1, 2)), 50, kTol, 7));
  CHECK(spin_action_check(Multivector::blade(d, 0b0011, Rational(2, 5)), 50, kTol, 7));
  // a grade-1 exponent shears vectors out of their own span
  CHECK_FALSE(spin_action_check(Multivector::generator(d, 1), 50, kTol, 7));
}

TEST_CASE("conjugation fixes an explicitly supplied invariant subspace") {
  const auto d = AlgebraDescriptor::generic(0, 3, Ring::Real);
  const auto e1 = Multivector::generator(d, 0);
  const auto e2 = Multivector::generator(d, 1);
  const auto e3 = Multivector::generator(d, 2);
  const std::vector<Multivector> triple = {e1 + e2 * e3, e2 + e3 * e1, e3 + e1 * e2};
  const auto span = echelonize(d, triple);
  for (const auto& t : triple) {
    CHECK(spin_action_check(t, 25, kTol, 11, span));
  }
}
