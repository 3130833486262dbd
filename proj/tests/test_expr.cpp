#include <doctest.h>

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cliffbreak/expr.hpp"
#include "cliffbreak/multivector.hpp"

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

std::optional<std::size_t> syntax_offset(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse shapes") {
  const auto half = parse("(1+g5)/2");
  const auto* div = std::get_if<DivInt>(&half->node);
  REQUIRE(div != nullptr);
  CHECK(div->divisor == Rational(2));
  const auto* sum = std::get_if<Sum>(&div->numerator->node);
  REQUIRE(sum != nullptr);
  CHECK(sum->terms.size() == 2);
  CHECK(sum->terms[0].sign == 1);

  const auto prod = parse("j*g0*g5");
  const auto* p = std::get_if<Product>(&prod->node);
  REQUIRE(p != nullptr);
  CHECK(p->factors.size() == 3);

  const auto g = parse("grade(rev(e1*e2), 2)");
  const auto* gp = std::get_if<GradeProj>(&g->node);
  REQUIRE(gp != nullptr);
  CHECK(gp->grade == 2);
  CHECK(std::holds_alternative<Rev>(gp->inner->node));
}

TEST_CASE("chained sums and products flatten") {
  CHECK(expr_equal(parse("(1+2)+3"), parse("1+2+3")));
  CHECK(expr_equal(parse("1+(2+3)"), parse("1+2+3")));
  CHECK(expr_equal(parse("(a*b)*c"), parse("a*b*c")));
  CHECK(expr_equal(parse("a*(b*c)"), parse("a*b*c")));
  // subtraction groups to the left and must not flatten the right side
  CHECK_FALSE(expr_equal(parse("1-(2-3)"), parse("1-2-3")));
  CHECK_FALSE(expr_equal(parse("1+2"), parse("2+1")));
}

TEST_CASE("syntax errors carry a byte offset") {
  CHECK(syntax_offset("1+") == 2);
  CHECK(syntax_offset("-1") == 0);  // no unary minus
  CHECK(syntax_offset("()") == 1);
  CHECK(syntax_offset("(1+2") == 4);
  CHECK(syntax_offset("grade(x 2)") == 8);
  CHECK(syntax_offset("a/b") == 2);  // divisor must be an integer
  CHECK(syntax_offset("1 ~ 2") == 2);
  CHECK_FALSE(syntax_offset("rev(a)*3").has_value());

  const std::string big(70000, '1');
  CHECK(syntax_offset(big) == 65536);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(expr_equal(parse(" ( 1 + g5 )\t/ 2 "), parse("(1+g5)/2")));
  CHECK(expr_equal(parse("grade( x ,  3 )"), parse("grade(x,3)")));
}

TEST_CASE("pretty output reparses to an equal tree") {
  const char* corpus[] = {
      "1",
      "42/7",
      "g0",
      "e12",
      "1+2",
      "1-2",
      "1+2+3",
      "1-(2-3)",
      "(1+2)*(3+4)",
      "a*b*c",
      "a*(b*c)",
      "(a/2)*b",
      "a*b/2",
      "(a+b)/2",
      "((a+b)/2)/3",
      "rev(a)",
      "rev(a*b+c)",
      "rev(rev(x))",
      "grade(x,0)",
      "grade(x+y,2)",
      "grade(rev(a*b),1)",
      "(1+g5)/2",
      "(1-g5)/2",
      "i*g1",
      "j*g0*g5",
      "k*g0*g5",
      "g1*g2+i*g0*g3",
      "(g1*g2+i*g0*g3)/2",
      "g3*g1+i*g2",
      "g0*g1*g2*g3",
      "i*g0*g1*g2*g3",
      "e1+e2*e3",
      "e2+e3*e1",
      "e3+e1*e2",
      "e1-e2*e3",
      "(e1+e2*e3)/2",
      "1+e1*e2*e3",
      "(1+e1*e2*e3)/2",
      "(1-e1*e2*e3)/2",
      "j*k",
      "i*j*k",
      "2*a-3*b+4*c",
      "a-b-c",
      "a-(b-c)",
      "a*(b+c)*d",
      "grade(a,1)+grade(a,2)",
      "rev(a)+rev(b)",
      "(a+b)*(a-b)",
      "x*x-y*y",
      "(x+y+z)/3",
      "rev((a+b)/2)",
      "grade((a+b)*c,2)",
      "1/2+1/3",
      "7*x/2",
  };
  for (const auto* text : corpus) {
    const auto ast = parse(text);
    const auto round = parse(pretty(ast));
    CHECK_MESSAGE(expr_equal(ast, round), text, " -> ", pretty(ast));
  }
}

TEST_CASE("random byte strings never crash the parser") {
  std::mt19937_64 rng(0xFBADF00Du);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<int> printable(32, 126);
  std::uniform_int_distribution<int> anybyte(1, 255);
  const std::string alphabet = "()+-*/,0123456789abgexjkrev grade";
  std::uniform_int_distribution<std::size_t> from_alpha(0, alphabet.size() - 1);
  int parsed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int n = len(rng);
    const int m = mode(rng);
    for (int c = 0; c < n; ++c) {
      if (m == 0) {
        s.push_back(static_cast<char>(printable(rng)));
      } else if (m == 1) {
        s.push_back(static_cast<char>(anybyte(rng)));
      } else {
        s.push_back(alphabet[from_alpha(rng)]);
      }
    }
    try {
      (void)parse(s);
      ++parsed;
    } catch (const SyntaxError&) {
      // expected for nearly all inputs
    }
  }
  CHECK(parsed >= 0);
}

TEST_CASE("evaluation oracles in the quaternionic Dirac algebra") {
  const auto d = AlgebraDescriptor::dirac_h();
  const auto ev = [&](const char* s) { return eval(parse(s), d); };
  CHECK(ev("g5*g5") == Multivector::one(d));
  CHECK(ev("i*g5") == -Multivector::blade(d, 0b1111));
  CHECK(ev("g0*g0") == Multivector::one(d));
  CHECK(ev("g1*g1") == -Multivector::one(d));
  CHECK(ev("rev(g0*g1)") == -Multivector::blade(d, 0b11));
  CHECK(ev("grade(1+g0+g0*g1, 1)") == Multivector::generator(d, 0));
  CHECK(ev("(1+g5)/2") * ev("(1-g5)/2") == Multivector::zero(d));
  CHECK(ev("j*k") == Multivector::ring_unit(d, 1));
}

TEST_CASE("evaluation errors carry engine codes") {
  const auto dh = AlgebraDescriptor::dirac_h();
  const auto dc = AlgebraDescriptor::dirac_c();
  const auto dr = AlgebraDescriptor::generic(2, 0, Ring::Real);
  CHECK(thrown_code([&] { eval(parse("k"), dc); }) == ErrorCode::RingMismatch);
  CHECK(thrown_code([&] { eval(parse("i"), dr); }) == ErrorCode::RingMismatch);
  CHECK(thrown_code([&] { eval(parse("e3"), dr); }) == ErrorCode::UndefinedSymbol);
  CHECK(thrown_code([&] { eval(parse("g0"), dr); }) == ErrorCode::UndefinedSymbol);
  CHECK(thrown_code([&] { eval(parse("x"), dh); }) == ErrorCode::UndefinedSymbol);
  CHECK(thrown_code([&] { eval(parse("1/0"), dh); }) == ErrorCode::DivisionByZero);
  CHECK(thrown_code([&] { eval(parse("grade(g0, 9)"), dh); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("bindings resolve after the built-in symbols") {
  const auto d = AlgebraDescriptor::dirac_h();
  std::map<std::string, Multivector> binds;
  binds.emplace("u1", Multivector::blade(d, 0b0110) + Multivector::blade(d, 0b1001, 1, 1));
  binds.emplace("g0", Multivector::one(d));  // must be shadowed by the generator
  CHECK(eval(parse("u1*u1"), d, binds) == square(binds.at("u1")));
  CHECK(eval(parse("g0"), d, binds) == Multivector::generator(d, 0));
  CHECK(thrown_code([&] { eval(parse("u2"), d, binds); }) == ErrorCode::UndefinedSymbol);
}
