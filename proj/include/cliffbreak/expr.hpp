#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliffbreak/multivector.hpp"

namespace cliffbreak {

/// Positioned parse failure; the offset is a byte index into the input.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(std::size_t offset, std::string expected)
      : std::runtime_error("SYNTAX at offset " + std::to_string(offset) + ": expected " +
                           expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  Rational value;
};
struct SymbolRef {
  std::string name;
};
struct Product {
  std::vector<ExprPtr> factors;  // at least two
};
struct DivInt {
  ExprPtr numerator;
  Rational divisor;
};
struct SumTerm {
  int sign;  // +1 or -1; the first term of a Sum is always +1
  ExprPtr term;
};
struct Sum {
  std::vector<SumTerm> terms;  // at least two
};
struct Rev {
  ExprPtr inner;
};
struct GradeProj {
  ExprPtr inner;
  int grade;
};

struct Expr {
  std::variant<IntLit, SymbolRef, Product, DivInt, Sum, Rev, GradeProj> node;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)* ("/" integer)?
///   factor := integer | symbol | "(" expr ")" | "rev(" expr ")"
///           | "grade(" expr "," integer ")"
/// Whitespace-insensitive; input capped at 64 KiB; plus-chains and product
/// chains are flattened so pretty() round-trips to an equal tree.
ExprPtr parse(std::string_view text);

std::string pretty(const Expr& e);
inline std::string pretty(const ExprPtr& e) { return pretty(*e); }

bool expr_equal(const Expr& a, const Expr& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_equal(*a, *b); }

/// Evaluates against a descriptor: units i/j/k per ring, g0..g3 and the
/// derived g5 in Dirac contexts, e1..en otherwise; extra names resolve via
/// bindings. Throws EngineError (UndefinedSymbol, RingMismatch,
/// DivisionByZero) on bad input.
Multivector eval(const Expr& e, const AlgebraDescriptor& d,
                 const std::map<std::string, Multivector>& bindings = {});
inline Multivector eval(const ExprPtr& e, const AlgebraDescriptor& d,
                        const std::map<std::string, Multivector>& bindings = {}) {
  return eval(*e, d, bindings);
}

}  // namespace cliffbreak
