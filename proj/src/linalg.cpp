#include "cliffbreak/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace cliffbreak {

Col key_to_col(const AlgebraDescriptor& d, const MonomialKey& k) {
  return static_cast<Col>(k.unit) * (Col{1} << d.gen_count()) + k.mask;
}

MonomialKey col_to_key(const AlgebraDescriptor& d, Col c) {
  const Col span = Col{1} << d.gen_count();
  return MonomialKey{static_cast<std::uint8_t>(c / span), static_cast<BladeMask>(c % span)};
}

Rational SparseVec::at(Col c) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), c,
                             [](const auto& t, Col col) { return t.first < col; });
  if (it == terms.end() || it->first != c) return Rational{};
  return it->second;
}

void SparseVec::scale(const Rational& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& t : terms) t.second = t.second * c;
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (c.is_zero() || other.terms.empty()) return;
  std::vector<std::pair<Col, Rational>> merged;
  merged.reserve(terms.size() + other.terms.size());
  auto a = terms.begin();
  auto b = other.terms.begin();
  while (a != terms.end() || b != other.terms.end()) {
    if (b == other.terms.end() || (a != terms.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational sum = a->second + c * b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms = std::move(merged);
}

SparseVec to_sparse(const Multivector& m) {
  SparseVec v;
  v.terms.reserve(m.terms().size());
  for (const auto& [key, coeff] : m.terms())
    v.terms.emplace_back(key_to_col(m.descriptor(), key), coeff);
  return v;  // std::map iterates keys in column order already
}

Multivector from_sparse(const AlgebraDescriptor& d, const SparseVec& v) {
  Multivector m = Multivector::zero(d);
  for (const auto& [col, coeff] : v.terms) m.add_term(col_to_key(d, col), coeff);
  return m;
}

bool RowReducer::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = Rational(1) / v.leading_coeff();
  v.scale(inv);
  const Col lead = v.leading_col();
  pivots_.emplace(lead, std::move(v));
  return true;
}

SparseVec RowReducer::reduce(SparseVec v) const {
  while (!v.empty()) {
    auto it = pivots_.find(v.leading_col());
    if (it == pivots_.end()) break;
    Rational c = -v.leading_coeff();
    v.axpy(c, it->second);  // pivot row has leading coefficient 1
  }
  return v;
}

std::vector<SparseVec> RowReducer::finalize() const {
  std::vector<SparseVec> rows;
  rows.reserve(pivots_.size());
  for (const auto& [lead, row] : pivots_) rows.push_back(row);
  // Back-substitute bottom-up so every pivot column is cleared elsewhere.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const Col lead = rows[i].leading_col();
    for (std::size_t j = 0; j < i; ++j) {
      Rational c = rows[j].at(lead);
      if (!c.is_zero()) rows[j].axpy(-c, rows[i]);
    }
  }
  return rows;
}

bool SubspaceBasis::contains(const Multivector& x) const {
  return coordinates(x).has_value();
}

std::optional<std::vector<Rational>> SubspaceBasis::coordinates(const Multivector& x) const {
  // Rows are in reduced echelon form: the coordinate along each row is just
  // x's coefficient at that row's pivot monomial.
  std::vector<Rational> coords;
  coords.reserve(rows_.size());
  Multivector residue = x;
  for (const auto& row : rows_) {
    const MonomialKey pivot = row.terms().begin()->first;
    Rational c = residue.coeff(pivot);
    coords.push_back(c);
    if (!c.is_zero()) residue = residue - row * c;
  }
  if (!residue.is_zero()) return std::nullopt;
  return coords;
}

SubspaceBasis echelonize(const AlgebraDescriptor& d, const std::vector<Multivector>& vecs) {
  RowReducer rr;
  for (const auto& v : vecs) rr.insert(to_sparse(v));
  std::vector<Multivector> rows;
  for (const auto& r : rr.finalize()) rows.push_back(from_sparse(d, r));
  return SubspaceBasis(d, std::move(rows));
}

SubspaceBasis full_basis(const AlgebraDescriptor& d) {
  std::vector<Multivector> rows;
  rows.reserve(d.real_dim());
  for (int u = 0; u < d.units(); ++u)
    for (BladeMask m = 0; m < (BladeMask{1} << d.gen_count()); ++m)
      rows.push_back(Multivector::blade(d, m, Rational(1), static_cast<std::uint8_t>(u)));
  return SubspaceBasis(d, std::move(rows));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  // Zassenhaus: echelonize rows [x | x] for x in A and [y | 0] for y in B.
  // Rows whose left half vanished span {0} x (A ∩ B).
  const AlgebraDescriptor& d = a.descriptor();
  const Col offset = static_cast<Col>(d.real_dim());
  RowReducer rr;
  for (const auto& x : a.rows()) {
    SparseVec v = to_sparse(x);
    SparseVec both = v;
    for (const auto& [col, coeff] : v.terms) both.terms.emplace_back(col + offset, coeff);
    rr.insert(std::move(both));
  }
  for (const auto& y : b.rows()) rr.insert(to_sparse(y));
  std::vector<Multivector> meet;
  for (const auto& row : rr.finalize()) {
    if (row.leading_col() < offset) continue;
    SparseVec shifted;
    for (const auto& [col, coeff] : row.terms) shifted.terms.emplace_back(col - offset, coeff);
    meet.push_back(from_sparse(d, shifted));
  }
  return echelonize(d, meet);
}

namespace {

/// Null space of the row span of `equations` over variables 0..var_count-1,
/// one basis vector per free variable.
std::vector<SparseVec> kernel_of(RowReducer& equations, int var_count) {
  std::vector<SparseVec> rref = equations.finalize();
  std::vector<bool> is_pivot(var_count, false);
  for (const auto& row : rref) is_pivot[row.leading_col()] = true;
  std::vector<SparseVec> kernel;
  for (Col f = 0; f < static_cast<Col>(var_count); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (const auto& row : rref) {
      Rational c = row.at(f);
      if (!c.is_zero()) v.terms.emplace_back(row.leading_col(), -c);
    }
    v.terms.emplace_back(f, Rational(1));
    std::sort(v.terms.begin(), v.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

SubspaceBasis commutant(const std::vector<Multivector>& constraints, const SubspaceBasis& ambient) {
  const AlgebraDescriptor& d = ambient.descriptor();
  const int k = ambient.rank();
  // Unknown x = sum over t of lambda_t * row_t; each dense column of each
  // commutator [row_t, c] contributes one linear equation in the lambdas.
  RowReducer equations;
  for (const auto& c : constraints) {
    std::map<Col, SparseVec> by_col;
    for (int t = 0; t < k; ++t) {
      Multivector comm = commutator(ambient.rows()[t], c);
      for (const auto& [key, coeff] : comm.terms())
        by_col[key_to_col(d, key)].terms.emplace_back(static_cast<Col>(t), coeff);
    }
    for (auto& [col, eq] : by_col) equations.insert(std::move(eq));
  }
  std::vector<Multivector> solutions;
  for (const auto& lam : kernel_of(equations, k)) {
    Multivector x = Multivector::zero(d);
    for (const auto& [t, coeff] : lam.terms) x = x + ambient.rows()[t] * coeff;
    solutions.push_back(std::move(x));
  }
  return echelonize(d, solutions);
}

std::optional<Multivector> internal_unit(const SubspaceBasis& s) {
  const AlgebraDescriptor& d = s.descriptor();
  const int k = s.rank();
  if (k == 0) return std::nullopt;
  // Solve u * r = r and r * u = r for all basis rows r, with u in the span.
  // Augmented column k carries the negated right-hand side.
  const Col aug = static_cast<Col>(k);
  RowReducer equations;
  for (const auto& r : s.rows()) {
    for (int side = 0; side < 2; ++side) {
      std::map<Col, SparseVec> by_col;
      for (int t = 0; t < k; ++t) {
        const Multivector& b = s.rows()[t];
        Multivector prod = side == 0 ? b * r : r * b;
        for (const auto& [key, coeff] : prod.terms())
          by_col[key_to_col(d, key)].terms.emplace_back(static_cast<Col>(t), coeff);
      }
      for (const auto& [key, coeff] : r.terms())
        by_col[key_to_col(d, key)].terms.emplace_back(aug, -coeff);
      for (auto& [col, eq] : by_col) equations.insert(std::move(eq));
    }
  }
  std::vector<Rational> lambda(k);
  for (const auto& row : equations.finalize()) {
    if (row.leading_col() == aug) return std::nullopt;  // inconsistent
    lambda[row.leading_col()] = -row.at(aug);           // free variables stay 0
  }
  Multivector u = Multivector::zero(d);
  for (int t = 0; t < k; ++t) u = u + s.rows()[t] * lambda[t];
  for (const auto& r : s.rows())
    if (!(u * r == r) || !(r * u == r)) return std::nullopt;
  return u;
}

Inertia inertia_of(SymmetricForm form) {
  auto& m = form.mat;
  const int n = static_cast<int>(m.size());
  Inertia res;
  int i = 0;
  while (i < n) {
    // Prefer a nonzero diagonal pivot.
    int piv = -1;
    for (int j = i; j < n; ++j) {
      if (!m[j][j].is_zero()) {
        piv = j;
        break;
      }
    }
    if (piv < 0) {
      // All remaining diagonal entries vanish; find any off-diagonal entry.
      int r = -1, c = -1;
      for (int a = i; a < n && r < 0; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!m[a][b].is_zero()) {
            r = a;
            c = b;
            break;
          }
      if (r < 0) {
        res.zero += n - i;
        return res;
      }
      // Transvection row_r += row_c (and the mirrored column op) makes the
      // (r,r) entry 2*m[r][c] != 0 since both diagonals are zero here.
      for (int b = 0; b < n; ++b) m[r][b] = m[r][b] + m[c][b];
      for (int a = 0; a < n; ++a) m[a][r] = m[a][r] + m[a][c];
      piv = r;
    }
    if (piv != i) {
      std::swap(m[piv], m[i]);
      for (int a = 0; a < n; ++a) std::swap(m[a][piv], m[a][i]);
    }
    const Rational d = m[i][i];
    if (d.sign() > 0)
      ++res.plus;
    else
      ++res.minus;
    for (int r = i + 1; r < n; ++r) {
      if (m[r][i].is_zero()) continue;
      Rational f = m[r][i] / d;
      for (int b = i; b < n; ++b) m[r][b] = m[r][b] - f * m[i][b];
      for (int a = i; a < n; ++a) m[a][r] = m[a][r] - f * m[a][i];
    }
    ++i;
  }
  return res;
}

}  // namespace cliffbreak
