#include "cliffbreak/lie.hpp"

#include <utility>

#include "cliffbreak/structure.hpp"

namespace cliffbreak {

namespace {

LieBasis with_structure(const AlgebraDescriptor& d, const std::vector<Multivector>& span) {
  LieBasis l{echelonize(d, span), {}};
  const int n = l.basis.rank();
  l.structure.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      auto coords = l.basis.coordinates(commutator(l.basis.rows()[r], l.basis.rows()[s]));
      if (!coords)
        throw EngineError(ErrorCode::NotClosed, "bracket left the span during closure");
      for (int t = 0; t < n; ++t) {
        l.structure[r][s][t] = (*coords)[t];
        l.structure[s][r][t] = -(*coords)[t];
      }
    }
  return l;
}

}  // namespace

LieBasis lie_closure(const std::vector<Multivector>& elements) {
  if (elements.empty()) throw EngineError(ErrorCode::InvalidArgument, "no Lie elements given");
  const AlgebraDescriptor d = elements[0].descriptor();
  RowReducer rr;
  std::vector<Multivector> reps;
  auto absorb = [&](const Multivector& x) {
    SparseVec res = rr.reduce(to_sparse(x));
    if (res.empty()) return;
    res.scale(Rational(1) / res.leading_coeff());
    reps.push_back(from_sparse(d, res));
    rr.insert(std::move(res));
  };
  for (const auto& e : elements) absorb(e);
  for (std::size_t next = 0; next < reps.size(); ++next)
    for (std::size_t j = 0; j < next; ++j) absorb(commutator(reps[next], reps[j]));
  return with_structure(d, reps);
}

LieBasis bivector_algebra(const std::vector<Multivector>& gens) {
  GeneratorReport report = verify_generators(gens);
  if (!report.signature)
    throw EngineError(ErrorCode::InvalidGenerators,
                      "bivector algebra needs anticommuting generators with unit squares");
  std::vector<Multivector> products;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) products.push_back(gens[a] * gens[b]);
  return lie_closure(products);
}

SymmetricForm killing_form(const LieBasis& l) {
  const int n = l.dimension();
  SymmetricForm k;
  k.mat.assign(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      Rational acc;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Rational& x = l.structure[r][a][b];
          if (x.is_zero()) continue;
          acc += x * l.structure[s][b][a];
        }
      k.mat[s][r] = acc;
      k.mat[r][s] = std::move(acc);
    }
  return k;
}

RealFormVerdict killing_verdict(const LieBasis& l) {
  RealFormVerdict v;
  v.dimension = l.dimension();
  v.inertia = inertia_of(killing_form(l));
  struct Entry {
    int dim;
    Inertia in;
    const char* name;
  };
  static const Entry kCatalogue[] = {
      {15, {9, 6, 0}, "sl(4,R)"}, {15, {0, 15, 0}, "su(4)"},  {15, {8, 7, 0}, "su(2,2)"},
      {15, {5, 10, 0}, "sl(2,H)"}, {3, {0, 3, 0}, "su(2)"},   {3, {2, 1, 0}, "sl(2,R)"},
      {6, {3, 3, 0}, "sl(2,C)"},
  };
  for (const auto& e : kCatalogue)
    if (e.dim == v.dimension && e.in == v.inertia) {
      v.name = e.name;
      break;
    }
  return v;
}

}  // namespace cliffbreak
