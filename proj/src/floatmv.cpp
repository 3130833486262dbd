#include "cliffbreak/floatmv.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cliffbreak {

FloatMultivector FloatMultivector::from_exact(const Multivector& m) {
  FloatMultivector f{m.descriptor(), {}};
  for (const auto& [key, c] : m.terms()) f.terms.emplace(key, c.to_double());
  return f;
}

double FloatMultivector::coeff(const MonomialKey& k) const {
  auto it = terms.find(k);
  return it == terms.end() ? 0.0 : it->second;
}

double FloatMultivector::max_abs() const {
  double m = 0.0;
  for (const auto& [key, c] : terms) m = std::max(m, std::abs(c));
  return m;
}

void FloatMultivector::add_term(const MonomialKey& k, double c) {
  if (c == 0.0) return;
  double& slot = terms[k];
  slot += c;
  if (slot == 0.0) terms.erase(k);
}

FloatMultivector FloatMultivector::scaled(double c) const {
  FloatMultivector out{desc, {}};
  for (const auto& [key, v] : terms) out.add_term(key, v * c);
  return out;
}

FloatMultivector FloatMultivector::reverse() const {
  FloatMultivector out{desc, {}};
  for (const auto& [key, v] : terms) {
    const int g = blade_grade(key.mask);
    out.add_term(key, (g * (g - 1) / 2) % 2 == 0 ? v : -v);
  }
  return out;
}

FloatMultivector operator+(const FloatMultivector& a, const FloatMultivector& b) {
  FloatMultivector out = a;
  for (const auto& [key, v] : b.terms) out.add_term(key, v);
  return out;
}

FloatMultivector operator-(const FloatMultivector& a, const FloatMultivector& b) {
  FloatMultivector out = a;
  for (const auto& [key, v] : b.terms) out.add_term(key, -v);
  return out;
}

FloatMultivector operator*(const FloatMultivector& a, const FloatMultivector& b) {
  FloatMultivector out{a.desc, {}};
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      const UnitProduct up = unit_mul(ka.unit, kb.unit);
      const BladeProduct bp = blade_product(a.desc.sig, ka.mask, kb.mask);
      out.add_term(MonomialKey{up.unit, bp.mask}, va * vb * up.sign * bp.sign);
    }
  return out;
}

FloatMultivector exp_float(const FloatMultivector& x, double tol) {
  int halvings = 0;
  double norm = x.max_abs();
  while (norm > 0.5 && halvings < 64) {
    norm /= 2;
    ++halvings;
  }
  const FloatMultivector small = x.scaled(std::ldexp(1.0, -halvings));
  FloatMultivector sum = FloatMultivector::one(x.desc);
  FloatMultivector term = FloatMultivector::one(x.desc);
  constexpr int kTermCap = 200;
  int quiet = 0;  // consecutive terms below the tail threshold
  for (int k = 1; k <= kTermCap && quiet < 2; ++k) {
    term = (term * small).scaled(1.0 / k);
    sum = sum + term;
    const double bound = tol * std::max(1.0, sum.max_abs());
    quiet = term.max_abs() <= bound ? quiet + 1 : 0;
  }
  if (quiet < 2)
    throw EngineError(ErrorCode::Nonconvergence, "exponential series did not settle");
  for (int s = 0; s < halvings; ++s) sum = sum * sum;
  return sum;
}

namespace {

/// Deterministic, platform-stable double in [-1, 1).
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

bool pure_grade2(const Multivector& b) {
  if (b.is_zero()) return false;
  for (const auto& [key, c] : b.terms())
    if (blade_grade(key.mask) != 2) return false;
  return true;
}

}  // namespace

bool spin_action_check(const Multivector& b, int trials, double tol, std::uint64_t seed) {
  const AlgebraDescriptor& d = b.descriptor();
  std::vector<Multivector> vecs;
  for (int idx = 0; idx < d.gen_count(); ++idx) vecs.push_back(Multivector::generator(d, idx));
  return spin_action_check(b, trials, tol, seed, echelonize(d, vecs));
}

bool spin_action_check(const Multivector& b, int trials, double tol, std::uint64_t seed,
                       const SubspaceBasis& invariant) {
  const AlgebraDescriptor& d = b.descriptor();
  const double exp_tol = std::max(tol * 1e-3, 1e-15);
  const FloatMultivector g = exp_float(FloatMultivector::from_exact(b), exp_tol);
  const FloatMultivector ginv = exp_float(FloatMultivector::from_exact(-b), exp_tol);

  if (pure_grade2(b)) {
    FloatMultivector resid = g.reverse() * g - FloatMultivector::one(d);
    if (resid.max_abs() > tol) return false;
  }

  std::vector<FloatMultivector> rows;
  std::vector<MonomialKey> pivots;
  for (const auto& r : invariant.rows()) {
    rows.push_back(FloatMultivector::from_exact(r));
    pivots.push_back(r.terms().begin()->first);
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    FloatMultivector v = FloatMultivector::zero(d);
    for (const auto& row : rows) v = v + row.scaled(unit_double(rng));
    const FloatMultivector w = g * v * ginv;

    // Membership: peel the subspace coordinates off w (rows are a reduced
    // echelon basis, so the pivot coefficients are the coordinates).
    FloatMultivector resid = w;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double c = resid.coeff(pivots[r]);
      if (c != 0.0) resid = resid - rows[r].scaled(c);
    }
    if (resid.max_abs() > tol) return false;

    const double qv = (v * v).coeff(MonomialKey{0, 0});
    const double qw = (w * w).coeff(MonomialKey{0, 0});
    if (std::abs(qv - qw) > tol * std::max(1.0, std::abs(qv))) return false;
  }
  return true;
}

}  // namespace cliffbreak
