#include "cliffbreak/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace cliffbreak {
namespace {

constexpr std::size_t kMaxInput = 64 * 1024;

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Integer, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default: throw SyntaxError(start, "a valid token");
    }
    out.push_back({k, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().offset, "end of input");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static ExprPtr wrap(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  ExprPtr expr() {
    std::vector<SumTerm> terms;
    append_term(terms, +1, term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const int sign = take().kind == Tok::Plus ? +1 : -1;
      append_term(terms, sign, term());
    }
    if (terms.size() == 1 && terms[0].sign == +1) return terms[0].term;
    return wrap(Expr{Sum{std::move(terms)}});
  }

  // Flatten a positively signed nested sum so printing stays canonical.
  static void append_term(std::vector<SumTerm>& terms, int sign, ExprPtr t) {
    if (sign == +1 && std::holds_alternative<Sum>(t->node)) {
      for (const SumTerm& st : std::get<Sum>(t->node).terms) terms.push_back(st);
    } else {
      terms.push_back({sign, t});
    }
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors;
    append_factor(factors, factor());
    while (peek().kind == Tok::Star) {
      take();
      append_factor(factors, factor());
    }
    ExprPtr base = factors.size() == 1 ? factors[0] : wrap(Expr{Product{std::move(factors)}});
    if (peek().kind == Tok::Slash) {
      take();
      Token d = expect(Tok::Integer, "an integer divisor");
      return wrap(Expr{DivInt{base, Rational::parse(d.text)}});
    }
    return base;
  }

  static void append_factor(std::vector<ExprPtr>& factors, ExprPtr f) {
    if (std::holds_alternative<Product>(f->node)) {
      for (const ExprPtr& g : std::get<Product>(f->node).factors) factors.push_back(g);
    } else {
      factors.push_back(f);
    }
  }

  ExprPtr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer:
        return wrap(Expr{IntLit{Rational::parse(take().text)}});
      case Tok::Ident: {
        Token id = take();
        if (id.text == "rev") {
          expect(Tok::LParen, "'(' after rev");
          ExprPtr inner = expr();
          expect(Tok::RParen, "')'");
          return wrap(Expr{Rev{inner}});
        }
        if (id.text == "grade") {
          expect(Tok::LParen, "'(' after grade");
          ExprPtr inner = expr();
          expect(Tok::Comma, "','");
          Token g = expect(Tok::Integer, "a grade number");
          expect(Tok::RParen, "')'");
          return wrap(Expr{GradeProj{inner, std::atoi(g.text.c_str())}});
        }
        return wrap(Expr{SymbolRef{id.text}});
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.offset, "an integer, symbol, '(', rev(, or grade(");
    }
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw SyntaxError(peek().offset, what);
    return take();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const Expr& e) {
  return std::holds_alternative<Sum>(e.node) || std::holds_alternative<DivInt>(e.node);
}

}  // namespace

ExprPtr parse(std::string_view text) {
  if (text.size() > kMaxInput) throw SyntaxError(kMaxInput, "input of at most 64 KiB");
  return Parser(lex(text)).run();
}

std::string pretty(const Expr& e) {
  struct V {
    std::string operator()(const IntLit& n) const { return n.value.str(); }
    std::string operator()(const SymbolRef& s) const { return s.name; }
    std::string operator()(const Product& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += "*";
        const Expr& f = *p.factors[i];
        out += needs_parens_in_product(f) ? "(" + pretty(f) + ")" : pretty(f);
      }
      return out;
    }
    std::string operator()(const DivInt& d) const {
      const Expr& n = *d.numerator;
      std::string lhs = std::holds_alternative<Sum>(n.node) ||
                                std::holds_alternative<DivInt>(n.node)
                            ? "(" + pretty(n) + ")"
                            : pretty(n);
      return lhs + "/" + d.divisor.str();
    }
    std::string operator()(const Sum& s) const {
      std::string out;
      for (std::size_t i = 0; i < s.terms.size(); ++i) {
        const SumTerm& st = s.terms[i];
        if (i) out += st.sign > 0 ? " + " : " - ";
        const Expr& t = *st.term;
        bool parens = std::holds_alternative<Sum>(t.node);
        out += parens ? "(" + pretty(t) + ")" : pretty(t);
      }
      return out;
    }
    std::string operator()(const Rev& r) const { return "rev(" + pretty(*r.inner) + ")"; }
    std::string operator()(const GradeProj& g) const {
      return "grade(" + pretty(*g.inner) + ", " + std::to_string(g.grade) + ")";
    }
  };
  return std::visit(V{}, e.node);
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  struct V {
    const Expr& other;
    bool operator()(const IntLit& n) const {
      return n.value == std::get<IntLit>(other.node).value;
    }
    bool operator()(const SymbolRef& s) const {
      return s.name == std::get<SymbolRef>(other.node).name;
    }
    bool operator()(const Product& p) const {
      const Product& q = std::get<Product>(other.node);
      if (p.factors.size() != q.factors.size()) return false;
      for (std::size_t i = 0; i < p.factors.size(); ++i)
        if (!expr_equal(*p.factors[i], *q.factors[i])) return false;
      return true;
    }
    bool operator()(const DivInt& d) const {
      const DivInt& e = std::get<DivInt>(other.node);
      return d.divisor == e.divisor && expr_equal(*d.numerator, *e.numerator);
    }
    bool operator()(const Sum& s) const {
      const Sum& t = std::get<Sum>(other.node);
      if (s.terms.size() != t.terms.size()) return false;
      for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (s.terms[i].sign != t.terms[i].sign) return false;
        if (!expr_equal(*s.terms[i].term, *t.terms[i].term)) return false;
      }
      return true;
    }
    bool operator()(const Rev& r) const {
      return expr_equal(*r.inner, *std::get<Rev>(other.node).inner);
    }
    bool operator()(const GradeProj& g) const {
      const GradeProj& h = std::get<GradeProj>(other.node);
      return g.grade == h.grade && expr_equal(*g.inner, *h.inner);
    }
  };
  return std::visit(V{b}, a.node);
}

namespace {

Multivector resolve_symbol(const std::string& name, const AlgebraDescriptor& d,
                           const std::map<std::string, Multivector>& bindings) {
  const Ring ring = d.ring;
  if (name == "i") {
    if (ring == Ring::Real)
      throw EngineError(ErrorCode::RingMismatch, "unit i needs a complex or quaternionic ring");
    return Multivector::ring_unit(d, 1);
  }
  if (name == "j" || name == "k") {
    if (ring != Ring::Quaternion)
      throw EngineError(ErrorCode::RingMismatch, "unit " + name + " needs a quaternionic ring");
    return Multivector::ring_unit(d, name == "j" ? 2 : 3);
  }
  if (name.size() >= 2 && (name[0] == 'g' || name[0] == 'e')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits && name.size() <= 3) {
      long idx = std::atol(name.c_str() + 1);
      if (name[0] == 'g' && d.ctx == Context::Dirac) {
        if (idx >= 0 && idx <= 3) return Multivector::generator(d, static_cast<int>(idx));
        if (idx == 5) {
          // g5 = i * g0 g1 g2 g3; square +1 by construction.
          Multivector m = Multivector::ring_unit(d, 1);
          for (int mu = 0; mu < 4; ++mu) m = m * Multivector::generator(d, mu);
          return m;
        }
        throw EngineError(ErrorCode::UndefinedSymbol, name + " is not defined here");
      }
      if (name[0] == 'e' && d.ctx != Context::Dirac) {
        if (idx >= 1 && idx <= d.gen_count())
          return Multivector::generator(d, static_cast<int>(idx - 1));
        throw EngineError(ErrorCode::UndefinedSymbol,
                          name + " is out of range for " + d.name());
      }
    }
  }
  auto it = bindings.find(name);
  if (it != bindings.end()) return it->second;
  throw EngineError(ErrorCode::UndefinedSymbol, "undefined symbol: " + name);
}

}  // namespace

Multivector eval(const Expr& e, const AlgebraDescriptor& d,
                 const std::map<std::string, Multivector>& bindings) {
  struct V {
    const AlgebraDescriptor& d;
    const std::map<std::string, Multivector>& bindings;
    Multivector operator()(const IntLit& n) const { return Multivector::scalar(d, n.value); }
    Multivector operator()(const SymbolRef& s) const {
      return resolve_symbol(s.name, d, bindings);
    }
    Multivector operator()(const Product& p) const {
      Multivector acc = eval(*p.factors[0], d, bindings);
      for (std::size_t i = 1; i < p.factors.size(); ++i)
        acc = acc * eval(*p.factors[i], d, bindings);
      return acc;
    }
    Multivector operator()(const DivInt& dv) const {
      if (dv.divisor.is_zero())
        throw EngineError(ErrorCode::DivisionByZero, "division by zero");
      return eval(*dv.numerator, d, bindings) * (Rational(1) / dv.divisor);
    }
    Multivector operator()(const Sum& s) const {
      Multivector acc = Multivector::zero(d);
      for (const SumTerm& st : s.terms) {
        Multivector t = eval(*st.term, d, bindings);
        acc = st.sign > 0 ? acc + t : acc - t;
      }
      return acc;
    }
    Multivector operator()(const Rev& r) const { return eval(*r.inner, d, bindings).reverse(); }
    Multivector operator()(const GradeProj& g) const {
      return eval(*g.inner, d, bindings).grade_project(g.grade);
    }
  };
  return std::visit(V{d, bindings}, e.node);
}

}  // namespace cliffbreak
