#include "cliffbreak/structure.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cliffbreak {

const char* division_ring_name(DivisionRing d) {
  switch (d) {
    case DivisionRing::R: return "R";
    case DivisionRing::C: return "C";
    default: return "H";
  }
}

int division_ring_dim(DivisionRing d) {
  switch (d) {
    case DivisionRing::R: return 1;
    case DivisionRing::C: return 2;
    default: return 4;
  }
}

std::string IsoClass::str() const {
  std::string one = matrix_size == 1
                        ? std::string(division_ring_name(ring))
                        : "M(" + std::to_string(matrix_size) + "," + division_ring_name(ring) + ")";
  return factors == 2 ? one + " ⊕ " + one : one;
}

IsoClass classify_table(const Signature& sig) {
  const int n = sig.count();
  const int m = ((sig.plus - sig.minus) % 8 + 8) % 8;
  switch (m) {
    case 0:
    case 2: return {1, DivisionRing::R, 1L << (n / 2)};
    case 1: return {2, DivisionRing::R, 1L << ((n - 1) / 2)};
    case 3:
    case 7: return {1, DivisionRing::C, 1L << ((n - 1) / 2)};
    case 4:
    case 6: return {1, DivisionRing::H, 1L << ((n - 2) / 2)};
    default: return {2, DivisionRing::H, 1L << ((n - 3) / 2)};
  }
}

IsoClass classify_table(const Signature& sig, Ring ring) {
  IsoClass base = classify_table(sig);
  if (ring == Ring::Real) return base;
  if (ring == Ring::Complex) {
    switch (base.ring) {
      case DivisionRing::R: return {base.factors, DivisionRing::C, base.matrix_size};
      case DivisionRing::C: return {2 * base.factors, DivisionRing::C, base.matrix_size};
      default: return {base.factors, DivisionRing::C, 2 * base.matrix_size};
    }
  }
  switch (base.ring) {
    case DivisionRing::R: return {base.factors, DivisionRing::H, base.matrix_size};
    case DivisionRing::C: return {base.factors, DivisionRing::C, 2 * base.matrix_size};
    default: return {base.factors, DivisionRing::R, 4 * base.matrix_size};
  }
}

SubspaceBasis generated_subalgebra(const std::vector<Multivector>& gens, bool adjoin_unit) {
  if (gens.empty()) throw EngineError(ErrorCode::InvalidArgument, "no generators given");
  const AlgebraDescriptor d = gens[0].descriptor();
  RowReducer rr;
  std::vector<Multivector> reps;
  auto absorb = [&](const Multivector& x) -> bool {
    SparseVec res = rr.reduce(to_sparse(x));
    if (res.empty()) return false;
    res.scale(Rational(1) / res.leading_coeff());
    reps.push_back(from_sparse(d, res));
    rr.insert(std::move(res));
    return true;
  };
  if (adjoin_unit) absorb(Multivector::one(d));
  for (const auto& g : gens) absorb(g);
  // Worklist: every new independent element is multiplied against everything
  // seen so far, on both sides, until nothing new appears.
  for (std::size_t next = 0; next < reps.size(); ++next) {
    for (std::size_t j = 0; j <= next; ++j) {
      absorb(reps[next] * reps[j]);
      absorb(reps[j] * reps[next]);
    }
  }
  return echelonize(d, reps);
}

SubspaceBasis even_part(const AlgebraDescriptor& d) {
  std::vector<Multivector> rows;
  for (int u = 0; u < d.units(); ++u)
    for (BladeMask m = 0; m < (BladeMask{1} << d.gen_count()); ++m)
      if (blade_grade(m) % 2 == 0)
        rows.push_back(Multivector::blade(d, m, Rational(1), static_cast<std::uint8_t>(u)));
  return SubspaceBasis(d, std::move(rows));
}

namespace {

/// Linear functional x -> trace of left multiplication by x on S, valid for
/// x in the span of S. Returned as the per-row traces plus the pivot keys:
/// since S is in reduced echelon form, the coordinate of x along row t is
/// exactly x's coefficient at row t's pivot monomial.
struct TraceFunctional {
  std::map<MonomialKey, int> pivot_index;
  std::vector<Rational> row_trace;

  Rational operator()(const Multivector& x) const {
    Rational acc;
    for (const auto& [key, c] : x.terms()) {
      auto it = pivot_index.find(key);
      if (it != pivot_index.end()) acc += c * row_trace[it->second];
    }
    return acc;
  }
};

TraceFunctional trace_functional(const SubspaceBasis& s) {
  const auto& rows = s.rows();
  const int k = s.rank();
  TraceFunctional f;
  for (int t = 0; t < k; ++t) f.pivot_index.emplace(rows[t].terms().begin()->first, t);
  f.row_trace.resize(k);
  for (int t = 0; t < k; ++t) {
    Rational tr;
    for (int j = 0; j < k; ++j) {
      const Multivector prod = rows[t] * rows[j];
      tr += prod.coeff(rows[j].terms().begin()->first);
    }
    f.row_trace[t] = std::move(tr);
  }
  return f;
}

}  // namespace

SymmetricForm trace_form(const SubspaceBasis& s) {
  const auto& rows = s.rows();
  const int k = s.rank();
  const TraceFunctional tr = trace_functional(s);
  SymmetricForm form;
  form.mat.assign(k, std::vector<Rational>(k));
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) {
      Rational v = tr(rows[r] * rows[c]);
      form.mat[c][r] = v;
      form.mat[r][c] = std::move(v);
    }
  return form;
}

SubspaceBasis center_of(const SubspaceBasis& s) { return commutant(s.rows(), s); }

std::pair<SubspaceBasis, SubspaceBasis> idempotent_split(const SubspaceBasis& s,
                                                         const Multivector& omega) {
  const AlgebraDescriptor& d = s.descriptor();
  if (!s.contains(omega))
    throw EngineError(ErrorCode::InvalidArgument, "splitting element lies outside the subspace");
  if (!(omega * omega == Multivector::one(d)))
    throw EngineError(ErrorCode::NotInvolution, "splitting element does not square to 1");
  for (const auto& r : s.rows())
    if (!commutator(omega, r).is_zero())
      throw EngineError(ErrorCode::NotCentral, "splitting element is not central in the subspace");
  const Rational half(1, 2);
  const Multivector plus = (Multivector::one(d) + omega) * half;
  const Multivector minus = (Multivector::one(d) - omega) * half;
  std::vector<Multivector> prows, mrows;
  for (const auto& r : s.rows()) {
    prows.push_back(plus * r);
    mrows.push_back(minus * r);
  }
  return {echelonize(d, prows), echelonize(d, mrows)};
}

namespace {

std::optional<std::vector<Rational>> solve_combination(const AlgebraDescriptor& d,
                                                       const std::vector<Multivector>& basis,
                                                       const Multivector& target) {
  const Col aug = static_cast<Col>(basis.size());
  std::map<Col, SparseVec> by_col;
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (const auto& [key, c] : basis[t].terms())
      by_col[key_to_col(d, key)].terms.emplace_back(static_cast<Col>(t), c);
  for (const auto& [key, c] : target.terms())
    by_col[key_to_col(d, key)].terms.emplace_back(aug, -c);
  RowReducer eqs;
  for (auto& [col, eq] : by_col) eqs.insert(std::move(eq));
  std::vector<Rational> coeffs(basis.size());
  for (const auto& row : eqs.finalize()) {
    if (row.leading_col() == aug) return std::nullopt;
    coeffs[row.leading_col()] = -row.at(aug);
  }
  return coeffs;
}

/// Monic minimal polynomial of z over the rationals, acting in the unital
/// algebra with identity u; coefficients ascending, leading coefficient 1.
std::vector<Rational> min_poly(const Multivector& z, const Multivector& u) {
  std::vector<Multivector> pows = {u};
  for (;;) {
    Multivector next = pows.back() * z;
    if (auto c = solve_combination(z.descriptor(), pows, next)) {
      std::vector<Rational> f(pows.size() + 1);
      f.back() = 1;
      for (std::size_t i = 0; i < pows.size(); ++i) f[i] = -(*c)[i];
      return f;
    }
    pows.push_back(std::move(next));
  }
}

Rational eval_scalar_poly(const std::vector<Rational>& f, const Rational& x) {
  Rational acc;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Multivector eval_poly(const std::vector<Rational>& f, const Multivector& z, const Multivector& u) {
  Multivector acc = u * f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) acc = acc * z + u * f[i];
  return acc;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& f) {
  std::vector<Rational> roots;
  auto try_root = [&](const Rational& x) {
    if (eval_scalar_poly(f, x).is_zero() &&
        std::find(roots.begin(), roots.end(), x) == roots.end())
      roots.push_back(x);
  };
  const std::size_t deg = f.size() - 1;
  if (f[0].is_zero()) try_root(Rational(0));
  if (deg == 1) {
    try_root(-f[0]);
  } else if (deg == 2) {
    // Monic quadratic: exact roots when the discriminant is a perfect square.
    Rational disc = f[1] * f[1] - Rational(4) * f[0], s;
    if (disc.sign() >= 0 && disc.sqrt_exact(s)) {
      try_root((-f[1] + s) / 2);
      try_root((-f[1] - s) / 2);
    }
  } else {
    // Small-height candidates; centers that only split at irrational points
    // are handled by the conjugate-pair rule in the caller.
    for (long n : {1L, 2L, 3L, 4L})
      for (long dd : {1L, 2L, 3L, 4L}) {
        try_root(Rational(n, dd));
        try_root(Rational(-n, dd));
      }
  }
  return roots;
}

/// A chunk of a semisimple algebra: one simple factor (copies == 1) or a pair
/// of conjugate simple factors that only separate over an irrational center
/// point (copies == 2, span left unsplit).
struct FactorPiece {
  SubspaceBasis span;
  Multivector unit;
  int copies;
};

std::vector<FactorPiece> split_semisimple(const SubspaceBasis& s, const Multivector& u) {
  const AlgebraDescriptor& d = s.descriptor();
  SubspaceBasis z = center_of(s);
  if (z.rank() <= 1) return {{s, u, 1}};
  for (const auto& zr : z.rows()) {
    std::vector<Rational> f = min_poly(zr, u);
    if (f.size() < 3) continue;  // proportional to the unit
    for (const Rational& lambda : rational_roots(f)) {
      // g = f/(x - lambda); E = g(z)/g(lambda) is 1 on the lambda eigenspace
      // of the center and 0 elsewhere: a proper central idempotent.
      std::vector<Rational> g(f.size() - 1);
      g.back() = 1;
      for (std::size_t i = g.size() - 1; i-- > 0;) g[i] = f[i + 1] + lambda * g[i + 1];
      Rational gl = eval_scalar_poly(g, lambda);
      if (gl.is_zero()) continue;
      Multivector e = eval_poly(g, zr, u) * (Rational(1) / gl);
      if (e.is_zero() || e == u || !(e * e == e)) continue;
      Multivector co = u - e;
      std::vector<Multivector> prows, mrows;
      for (const auto& r : s.rows()) {
        prows.push_back(e * r);
        mrows.push_back(co * r);
      }
      auto out = split_semisimple(echelonize(d, prows), e);
      auto rest = split_semisimple(echelonize(d, mrows), co);
      out.insert(out.end(), std::make_move_iterator(rest.begin()),
                 std::make_move_iterator(rest.end()));
      return out;
    }
  }
  if (z.rank() == 2) {
    // No rational split: the center is a quadratic field. Negative
    // discriminant means a complex center (still simple over R); positive
    // means two conjugate factors that a rational basis cannot separate.
    for (const auto& zr : z.rows()) {
      std::vector<Rational> f = min_poly(zr, u);
      if (f.size() != 3) continue;
      Rational disc = f[1] * f[1] - Rational(4) * f[0];
      if (disc.sign() < 0) return {{s, u, 1}};
      if (disc.sign() > 0) return {{s, u, 2}};
    }
  }
  throw EngineError(ErrorCode::UnsupportedStructure,
                    "cannot separate the center into simple factors");
}

long exact_sqrt_dim(long dim, int ring_dim) {
  Rational s;
  if (dim <= 0 || dim % ring_dim != 0 || !Rational(dim / ring_dim).sqrt_exact(s))
    throw EngineError(ErrorCode::UnsupportedStructure,
                      "factor dimension is not a square over its division ring");
  return static_cast<long>(s.num().get_si());
}

/// (division ring, matrix size) of one FactorPiece.
std::pair<DivisionRing, long> classify_piece(const FactorPiece& piece) {
  if (piece.copies == 2) {
    Inertia in = inertia_of(trace_form(piece.span));
    DivisionRing ring = in.plus > in.minus
                            ? DivisionRing::R
                            : (in.plus < in.minus ? DivisionRing::H : DivisionRing::C);
    if (piece.span.rank() % 2 != 0)
      throw EngineError(ErrorCode::UnsupportedStructure, "odd-dimensional conjugate pair");
    return {ring, exact_sqrt_dim(piece.span.rank() / 2, division_ring_dim(ring))};
  }
  SubspaceBasis z = center_of(piece.span);
  DivisionRing ring;
  if (z.rank() == 2) {
    ring = DivisionRing::C;
  } else if (z.rank() == 1) {
    Inertia in = inertia_of(trace_form(piece.span));
    if (in.plus == in.minus)
      throw EngineError(ErrorCode::UnsupportedStructure, "balanced inertia with a real center");
    ring = in.plus > in.minus ? DivisionRing::R : DivisionRing::H;
  } else {
    throw EngineError(ErrorCode::UnsupportedStructure, "simple factor with oversized center");
  }
  return {ring, exact_sqrt_dim(piece.span.rank(), division_ring_dim(ring))};
}

}  // namespace

IsoClass classify_empirical(const SubspaceBasis& s) {
  if (s.rank() == 0) throw EngineError(ErrorCode::NotUnital, "empty subspace has no unit");
  auto unit = internal_unit(s);
  if (!unit) throw EngineError(ErrorCode::NotUnital, "no two-sided identity in the subspace");
  RowReducer member;
  for (const auto& r : s.rows()) member.insert(to_sparse(r));
  for (const auto& a : s.rows())
    for (const auto& b : s.rows())
      if (!member.reduce(to_sparse(a * b)).empty())
        throw EngineError(ErrorCode::NotClosed, "subspace is not closed under multiplication");
  Inertia whole = inertia_of(trace_form(s));
  if (whole.zero > 0)
    throw EngineError(ErrorCode::NotSemisimple, "regular trace form is degenerate");
  std::vector<FactorPiece> pieces = split_semisimple(s, *unit);
  int factors = 0;
  std::optional<std::pair<DivisionRing, long>> verdict;
  for (const auto& piece : pieces) {
    factors += piece.copies;
    auto cls = classify_piece(piece);
    if (verdict && *verdict != cls)
      throw EngineError(ErrorCode::UnsupportedStructure, "simple factors are not isomorphic");
    verdict = cls;
  }
  if (factors > 2)
    throw EngineError(ErrorCode::UnsupportedStructure, "more than two simple factors");
  return {factors, verdict->first, verdict->second};
}

GeneratorReport verify_generators(const std::vector<Multivector>& gens) {
  if (gens.empty()) throw EngineError(ErrorCode::InvalidArgument, "no generators given");
  const AlgebraDescriptor d = gens[0].descriptor();
  Multivector ps = Multivector::one(d);
  for (const auto& g : gens) ps = ps * g;
  GeneratorReport report(std::move(ps));
  report.pairwise_anticommute = true;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!anticommutator(gens[a], gens[b]).is_zero()) report.pairwise_anticommute = false;
  int plus = 0, minus = 0;
  bool all_unit_squares = true;
  for (const auto& g : gens) {
    Multivector sq = square(g);
    if (sq == Multivector::one(d)) {
      report.squares.push_back(+1);
      ++plus;
    } else if (sq == -Multivector::one(d)) {
      report.squares.push_back(-1);
      ++minus;
    } else {
      report.squares.push_back(std::nullopt);
      all_unit_squares = false;
    }
  }
  if (report.pairwise_anticommute && all_unit_squares) report.signature = Signature{plus, minus};
  SubspaceBasis sub = generated_subalgebra(gens, true);
  report.generated_dimension = sub.rank();
  report.full_algebra = report.generated_dimension == d.real_dim();
  return report;
}

std::optional<std::pair<std::uint8_t, Rational>> proportional_factor(const Multivector& x,
                                                                     const Multivector& y) {
  if (y.is_zero()) return std::nullopt;
  if (x.is_zero()) return std::make_pair(std::uint8_t{0}, Rational(0));
  const AlgebraDescriptor& d = x.descriptor();
  for (int u = 0; u < d.units(); ++u) {
    Multivector uy = Multivector::ring_unit(d, static_cast<std::uint8_t>(u)) * y;
    const auto& [key, lead] = *uy.terms().begin();
    Rational c = x.coeff(key) / lead;
    if (!c.is_zero() && x == uy * c) return std::make_pair(static_cast<std::uint8_t>(u), c);
  }
  return std::nullopt;
}

}  // namespace cliffbreak
