#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "cliffbreak/algebra.hpp"
#include "cliffbreak/multivector.hpp"
#include "cliffbreak/rational.hpp"

using namespace cliffbreak;

namespace {

template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const EngineError& e) {
    return e.code();
  }
  return std::nullopt;
}

Multivector random_mv(const AlgebraDescriptor& d, std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<BladeMask> mask(0, (BladeMask{1} << d.gen_count()) - 1);
  std::uniform_int_distribution<int> unit(0, d.units() - 1);
  std::uniform_int_distribution<long> num(-3, 3);
  Multivector m = Multivector::zero(d);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    long c = num(rng);
    if (c == 0) c = 1;
    m = m + Multivector::blade(d, mask(rng), Rational(c), static_cast<std::uint8_t>(unit(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
  CHECK((Rational(7, 2) - Rational(7, 2)).is_zero());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse handles integers and fractions") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
}

TEST_CASE("rational square roots are detected exactly") {
  Rational r(0);
  CHECK(Rational(9, 4).sqrt_exact(r));
  CHECK(r == Rational(3, 2));
  CHECK(Rational(0).sqrt_exact(r));
  CHECK(r == Rational(0));
  CHECK_FALSE(Rational(2).sqrt_exact(r));
  CHECK_FALSE(Rational(-1).sqrt_exact(r));
  CHECK_FALSE(Rational(1, 3).sqrt_exact(r));
}

TEST_CASE("quaternion unit table") {
  // row * column, units ordered 1, i, j, k
  struct Row {
    int sign;
    std::uint8_t unit;
  };
  const Row expect[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const UnitProduct got = unit_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      CHECK(got.sign == expect[a][b].sign);
      CHECK(got.unit == expect[a][b].unit);
    }
  }
  CHECK(unit_count(Ring::Real) == 1);
  CHECK(unit_count(Ring::Complex) == 2);
  CHECK(unit_count(Ring::Quaternion) == 4);
}

TEST_CASE("blade products respect the metric and anticommutation") {
  const Signature sig{1, 3};  // index 0 squares to +1, the rest to -1
  auto p = blade_product(sig, BladeMask{1}, BladeMask{1});
  CHECK(p.mask == 0);
  CHECK(p.sign == 1);
  p = blade_product(sig, BladeMask{2}, BladeMask{2});
  CHECK(p.sign == -1);
  // e_a e_b = -e_b e_a for distinct generators
  const auto ab = blade_product(sig, BladeMask{1}, BladeMask{2});
  const auto ba = blade_product(sig, BladeMask{2}, BladeMask{1});
  CHECK(ab.mask == ba.mask);
  CHECK(ab.sign == -ba.sign);
  CHECK(blade_grade(BladeMask{0b1011}) == 3);
  CHECK(blade_grade(BladeMask{0}) == 0);
}

TEST_CASE("generator relations hold in every signature") {
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      const auto d = AlgebraDescriptor::generic(p, q, Ring::Real);
      for (int a = 0; a < d.gen_count(); ++a) {
        const auto ea = Multivector::generator(d, a);
        CHECK(square(ea) == Multivector::scalar(d, Rational(d.metric_sign(a))));
        for (int b = a + 1; b < d.gen_count(); ++b) {
          const auto eb = Multivector::generator(d, b);
          CHECK(anticommutator(ea, eb).is_zero());
        }
      }
    }
  }
}

TEST_CASE("multiplication is associative on random inputs") {
  const AlgebraDescriptor descs[] = {
      AlgebraDescriptor::generic(2, 1, Ring::Real),
      AlgebraDescriptor::generic(0, 3, Ring::Complex),
      AlgebraDescriptor::dirac_h(),
  };
  std::mt19937_64 rng(0xC11FF0u);
  for (const auto& d : descs) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_mv(d, rng);
      const auto b = random_mv(d, rng);
      const auto c = random_mv(d, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("ring units commute with every blade") {
  const auto d = AlgebraDescriptor::dirac_h();
  for (std::uint8_t u = 1; u < 4; ++u) {
    const auto unit = Multivector::ring_unit(d, u);
    for (BladeMask m = 0; m < 16u; ++m) {
      CHECK(commutator(unit, Multivector::blade(d, m)).is_zero());
    }
  }
  // the quaternion units do not commute with one another
  const auto i = Multivector::ring_unit(d, 1);
  const auto j = Multivector::ring_unit(d, 2);
  const auto k = Multivector::ring_unit(d, 3);
  CHECK(commutator(i, j) == k * Rational(2));
  CHECK(commutator(j, k) == i * Rational(2));
  CHECK_FALSE(commutator(k, i).is_zero());
}

TEST_CASE("reversal is an anti-automorphism on blade coefficients") {
  // For quaternion coefficients the property is scoped to unit-free factors,
  // since reversal leaves the coefficient ring alone.
  const auto real_d = AlgebraDescriptor::generic(1, 3, Ring::Real);
  const auto cx_d = AlgebraDescriptor::generic(2, 2, Ring::Complex);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_mv(real_d, rng);
    const auto b = random_mv(real_d, rng);
    CHECK((a * b).reverse() == b.reverse() * a.reverse());
    const auto ca = random_mv(cx_d, rng);
    const auto cb = random_mv(cx_d, rng);
    CHECK((ca * cb).reverse() == cb.reverse() * ca.reverse());
  }
  CHECK(Multivector::blade(real_d, 0b11).reverse() == -Multivector::blade(real_d, 0b11));
  CHECK(Multivector::blade(real_d, 0b111).reverse() == -Multivector::blade(real_d, 0b111));
  CHECK(Multivector::blade(real_d, 0b1111).reverse() == Multivector::blade(real_d, 0b1111));
}

TEST_CASE("grade involution is an automorphism") {
  const auto d = AlgebraDescriptor::generic(3, 1, Ring::Real);
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_mv(d, rng);
    const auto b = random_mv(d, rng);
    CHECK((a * b).grade_involution() == a.grade_involution() * b.grade_involution());
  }
}

TEST_CASE("grade projections partition a multivector") {
  const auto d = AlgebraDescriptor::generic(2, 2, Ring::Real);
  std::mt19937_64 rng(5);
  const auto x = random_mv(d, rng, 6);
  Multivector sum = Multivector::zero(d);
  for (int k = 0; k <= d.gen_count(); ++k) sum = sum + x.grade_project(k);
  CHECK(sum == x);
  CHECK(thrown_code([&] { x.grade_project(5); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([&] { x.grade_project(-1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("volume elements square as the signature dictates") {
  const auto d13 = AlgebraDescriptor::generic(1, 3, Ring::Real);
  const auto d31 = AlgebraDescriptor::generic(3, 1, Ring::Real);
  const auto vol13 = Multivector::blade(d13, 0b1111);
  const auto vol31 = Multivector::blade(d31, 0b1111);
  CHECK(square(vol13) == -Multivector::one(d13));
  CHECK(square(vol31) == -Multivector::one(d31));

  const auto dh = AlgebraDescriptor::dirac_h();
  const auto g5 = Multivector::blade(dh, 0b1111, 1, 1);  // i * g0*g1*g2*g3
  CHECK(square(g5) == Multivector::one(dh));
}

TEST_CASE("string rendering is stable") {
  const auto d = AlgebraDescriptor::generic(2, 0, Ring::Real);
  CHECK(Multivector::zero(d).str() == "0");
  CHECK(Multivector::blade(d, 0b11).str() == "e1*e2");
  CHECK((-Multivector::blade(d, 0b11)).str() == "-e1*e2");
  CHECK(Multivector::scalar(d, Rational(1, 2)).str() == "1/2");

  const auto dh = AlgebraDescriptor::dirac_h();
  const auto half = Multivector::scalar(dh, Rational(1, 2));
  const auto g5 = Multivector::blade(dh, 0b1111, Rational(1, 2), 1);
  CHECK((half + g5).str() == "1/2 + 1/2*i*g0*g1*g2*g3");
  CHECK(Multivector::blade(dh, 0b1, -1, 3).str() == "-k*g0");
}

TEST_CASE("descriptors parse, render, and reject mismatches") {
  CHECK(parse_algebra("cl(2,3)").name() == "cl(2,3)");
  CHECK(parse_algebra("cl(1,3):h").name() == "cl(1,3):h");
  CHECK(parse_algebra("cl(0,0)").real_dim() == 1);
  CHECK(parse_algebra("dirac-c").name() == "dirac-c");
  CHECK(parse_algebra("dirac-h").ring == Ring::Quaternion);
  CHECK(parse_algebra("dirac-h").gen_symbol(0) == "g0");
  CHECK(parse_algebra("cl(2,2)").gen_symbol(0) == "e1");
  CHECK(parse_algebra("dirac-h").real_dim() == 64);
  CHECK(parse_algebra("cl(3,3)").real_dim() == 64);

  CHECK(thrown_code([] { parse_algebra("m(2,2)"); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { parse_algebra("cl(2,3):x"); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { parse_algebra("cl(7,7)"); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { parse_algebra("cl(x,1)"); }) == ErrorCode::InvalidArgument);

  const auto a = parse_algebra("cl(1,0)");
  const auto b = parse_algebra("cl(0,1)");
  CHECK(thrown_code([&] {
          auto s = Multivector::generator(a, 0) + Multivector::generator(b, 0);
          (void)s;
        }) == ErrorCode::DescriptorMismatch);
  CHECK(thrown_code([&] { (void)Multivector::blade(a, 0, 1, 1); }) == ErrorCode::RingMismatch);
  CHECK(thrown_code([&] { (void)Multivector::blade(a, 0b10); }) == ErrorCode::InvalidArgument);
}
