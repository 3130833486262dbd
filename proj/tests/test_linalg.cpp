#include <doctest.h>

#include <random>
#include <vector>

#include "cliffbreak/linalg.hpp"
#include "cliffbreak/multivector.hpp"

using namespace cliffbreak;

namespace {

Multivector blade(const AlgebraDescriptor& d, BladeMask m, long c = 1, std::uint8_t u = 0) {
  return Multivector::blade(d, m, Rational(c), u);
}

}  // namespace

TEST_CASE("echelonization finds rank and is idempotent") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  const auto e1 = Multivector::generator(d, 0);
  const auto e2 = Multivector::generator(d, 1);
  const auto s = echelonize(d, {e1, e2, e1 * Rational(2) + e2 * Rational(3)});
  CHECK(s.rank() == 2);
  const auto again = echelonize(d, s.rows());
  CHECK(s == again);
  CHECK(s.contains(e1 + e2));
  CHECK_FALSE(s.contains(Multivector::one(d)));
}

TEST_CASE("coordinates invert the basis expansion") {
  const auto d = AlgebraDescriptor::generic(3, 0, Ring::Real);
  const auto e1 = Multivector::generator(d, 0);
  const auto e2 = Multivector::generator(d, 1);
  const auto s = echelonize(d, {e1 + e2, e1 - e2});
  const auto x = e1 * Rational(3) + e2 * Rational(-5);
  const auto coords = s.coordinates(x);
  REQUIRE(coords.has_value());
  Multivector back = Multivector::zero(d);
  for (std::size_t r = 0; r < s.rows().size(); ++r) back = back + s.rows()[r] * (*coords)[r];
  CHECK(back == x);
  CHECK_FALSE(s.coordinates(Multivector::generator(d, 2)).has_value());
}

TEST_CASE("row reducer membership matches final basis") {
  const auto d = AlgebraDescriptor::generic(2, 1, Ring::Real);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> mask(0, 7);
  std::uniform_int_distribution<long> num(-2, 2);
  std::vector<Multivector> rows;
  for (int r = 0; r < 6; ++r) {
    Multivector m = Multivector::zero(d);
    for (int t = 0; t < 3; ++t) m = m + blade(d, static_cast<BladeMask>(mask(rng)), num(rng));
    rows.push_back(m);
  }
  // insertion order must not change the reduced basis
  auto fwd = echelonize(d, rows);
  std::vector<Multivector> rev(rows.rbegin(), rows.rend());
  auto bwd = echelonize(d, rev);
  CHECK(fwd == bwd);
  for (const auto& r : rows) CHECK(fwd.contains(r));
}

TEST_CASE("full basis spans every monomial") {
  const auto d = AlgebraDescriptor::generic(1, 2, Ring::Complex);
  const auto s = full_basis(d);
  CHECK(s.rank() == d.real_dim());
  CHECK(s.contains(blade(d, 0b101, -7, 1)));
}

TEST_CASE("subspace intersection") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  const auto one = Multivector::one(d);
  const auto e1 = Multivector::generator(d, 0);
  const auto e2 = Multivector::generator(d, 1);
  const auto a = echelonize(d, {one, e1});
  const auto b = echelonize(d, {e1, e2});
  const auto meet = intersect(a, b);
  CHECK(meet.rank() == 1);
  CHECK(meet.contains(e1));
  CHECK_FALSE(meet.contains(e2));

  const auto disjoint = intersect(echelonize(d, {one}), echelonize(d, {e2}));
  CHECK(disjoint.rank() == 0);
}

TEST_CASE("commutant ranks match hand-computed centres") {
  // Cl(2,0): centre is the scalars; Cl(3,0) adds the volume element.
  const auto d2 = AlgebraDescriptor::generic(2, 0, Ring::Real);
  const auto gens2 = std::vector<Multivector>{Multivector::generator(d2, 0),
                                              Multivector::generator(d2, 1)};
  const auto z2 = commutant(gens2, full_basis(d2));
  CHECK(z2.rank() == 1);
  CHECK(z2.contains(Multivector::one(d2)));

  const auto d3 = AlgebraDescriptor::generic(3, 0, Ring::Real);
  const auto gens3 = std::vector<Multivector>{Multivector::generator(d3, 0),
                                              Multivector::generator(d3, 1),
                                              Multivector::generator(d3, 2)};
  const auto z3 = commutant(gens3, full_basis(d3));
  CHECK(z3.rank() == 2);
  CHECK(z3.contains(blade(d3, 0b111)));

  // centraliser of a single generator in Cl(3,0): spanned by 1, e1, e2*e3, e1*e2*e3
  const auto c1 = commutant({Multivector::generator(d3, 0)}, full_basis(d3));
  CHECK(c1.rank() == 4);
  CHECK(c1.contains(blade(d3, 0b110)));
  for (const auto& row : c1.rows()) {
    CHECK(commutator(row, Multivector::generator(d3, 0)).is_zero());
  }
}

TEST_CASE("internal units are found when they exist") {
  const auto d = AlgebraDescriptor::generic(0, 2, Ring::Real);
  const auto full = full_basis(d);
  const auto u = internal_unit(full);
  REQUIRE(u.has_value());
  CHECK(*u == Multivector::one(d));

  // left ideal generated by an idempotent: its unit is the idempotent itself
  const auto d3 = AlgebraDescriptor::generic(0, 3, Ring::Real);
  const auto vol = blade(d3, 0b111);
  const auto p = (Multivector::one(d3) - vol) * Rational(1, 2);
  const auto fb = full_basis(d3);
  std::vector<Multivector> rows;
  for (const auto& b : fb.rows()) rows.push_back(p * b * p);
  const auto ideal = echelonize(d3, rows);
  CHECK(ideal.rank() == 4);
  const auto iu = internal_unit(ideal);
  REQUIRE(iu.has_value());
  CHECK(*iu == p);

  // no unit in a span that squares out of itself
  const auto d2 = AlgebraDescriptor::generic(2, 0, Ring::Real);
  const auto none = internal_unit(
      echelonize(d2, {Multivector::generator(d2, 0) + Multivector::generator(d2, 1)}));
  CHECK_FALSE(none.has_value());
}

TEST_CASE("inertia of small forms") {
  SymmetricForm diag;
  diag.mat = {{Rational(1), Rational(0), Rational(0)},
              {Rational(0), Rational(-1), Rational(0)},
              {Rational(0), Rational(0), Rational(0)}};
  const auto in = inertia_of(diag);
  CHECK(in.plus == 1);
  CHECK(in.minus == 1);
  CHECK(in.zero == 1);

  // hyperbolic plane needs the transvection path: no nonzero diagonal entry
  SymmetricForm hyp;
  hyp.mat = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  const auto hi = inertia_of(hyp);
  CHECK(hi.plus == 1);
  CHECK(hi.minus == 1);
  CHECK(hi.zero == 0);
}

TEST_CASE("inertia is invariant under unimodular congruence") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> idx(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    SymmetricForm a;
    a.mat.assign(4, std::vector<Rational>(4, Rational(0)));
    for (int r = 0; r < 4; ++r) {
      for (int c = r; c < 4; ++c) {
        a.mat[r][c] = Rational(entry(rng));
        a.mat[c][r] = a.mat[r][c];
      }
    }
    // M = product of integer transvections, so det M = 1
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4, Rational(0)));
    for (int r = 0; r < 4; ++r) m[r][r] = Rational(1);
    for (int t = 0; t < 6; ++t) {
      int r = idx(rng), c = idx(rng);
      if (r == c) continue;
      const Rational lam(entry(rng));
      for (int k = 0; k < 4; ++k) m[r][k] += lam * m[c][k];
    }
    SymmetricForm b;
    b.mat.assign(4, std::vector<Rational>(4, Rational(0)));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        Rational sum(0);
        for (int s = 0; s < 4; ++s) {
          for (int u = 0; u < 4; ++u) sum += m[s][r] * a.mat[s][u] * m[u][c];
        }
        b.mat[r][c] = sum;
      }
    }
    const auto ia = inertia_of(a);
    const auto ib = inertia_of(b);
    CHECK(ia.plus == ib.plus);
    CHECK(ia.minus == ib.minus);
    CHECK(ia.zero == ib.zero);
  }
}
