#include "cliffbreak/multivector.hpp"

#include <bit>
#include <sstream>

namespace cliffbreak {

Multivector Multivector::scalar(const AlgebraDescriptor& d, const Rational& c) {
  Multivector m(d);
  m.add_term(MonomialKey{0, 0}, c);
  return m;
}

Multivector Multivector::blade(const AlgebraDescriptor& d, BladeMask mask, const Rational& c,
                               std::uint8_t unit) {
  if (mask >= (BladeMask{1} << d.gen_count())) {
    throw EngineError(ErrorCode::InvalidArgument, "blade mask outside descriptor");
  }
  if (unit >= d.units()) {
    throw EngineError(ErrorCode::RingMismatch, "ring unit outside descriptor");
  }
  Multivector m(d);
  m.add_term(MonomialKey{unit, mask}, c);
  return m;
}

Multivector Multivector::generator(const AlgebraDescriptor& d, int idx) {
  if (idx < 0 || idx >= d.gen_count()) {
    throw EngineError(ErrorCode::InvalidArgument, "generator index outside descriptor");
  }
  return blade(d, BladeMask{1} << idx);
}

Multivector Multivector::ring_unit(const AlgebraDescriptor& d, std::uint8_t unit) {
  return blade(d, 0, 1, unit);
}

Rational Multivector::coeff(const MonomialKey& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(const MonomialKey& k, const Rational& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Multivector::require_same(const Multivector& o) const {
  if (!(desc_ == o.desc_)) {
    throw EngineError(ErrorCode::DescriptorMismatch,
                      desc_.name() + " combined with " + o.desc_.name());
  }
}

Multivector Multivector::operator-() const {
  Multivector r(desc_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Multivector& Multivector::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  a.require_same(b);
  Multivector r(a.desc_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const UnitProduct up = unit_mul(ka.unit, kb.unit);
      const BladeProduct bp = blade_product(a.desc_.sig, ka.mask, kb.mask);
      Rational c = ca * cb;
      if (up.sign * bp.sign < 0) c = -c;
      r.add_term(MonomialKey{up.unit, bp.mask}, c);
    }
  }
  return r;
}

Multivector Multivector::reverse() const {
  Multivector r(desc_);
  for (const auto& [k, c] : terms_) {
    const int g = blade_grade(k.mask);
    const bool flip = ((g * (g - 1) / 2) & 1) != 0;
    r.terms_.emplace(k, flip ? -c : c);
  }
  return r;
}

Multivector Multivector::grade_involution() const {
  Multivector r(desc_);
  for (const auto& [k, c] : terms_) {
    r.terms_.emplace(k, (blade_grade(k.mask) & 1) ? -c : c);
  }
  return r;
}

Multivector Multivector::grade_project(int k) const {
  if (k < 0 || k > desc_.gen_count()) {
    throw EngineError(ErrorCode::InvalidArgument,
                      "grade " + std::to_string(k) + " outside 0.." + std::to_string(desc_.gen_count()));
  }
  Multivector r(desc_);
  for (const auto& [key, c] : terms_) {
    if (blade_grade(key.mask) == k) r.terms_.emplace(key, c);
  }
  return r;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        mag = -c;
      }
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;

    std::string sym;
    if (k.unit != 0) sym = unit_name(k.unit);
    for (BladeMask m = k.mask; m != 0; m &= m - 1) {
      const int idx = std::countr_zero(m);
      if (!sym.empty()) sym += "*";
      sym += desc_.gen_symbol(idx);
    }
    if (sym.empty()) {
      out << mag.str();
    } else if (mag == Rational(1)) {
      out << sym;
    } else {
      out << mag.str() << "*" << sym;
    }
  }
  return out.str();
}

Multivector commutator(const Multivector& a, const Multivector& b) { return a * b - b * a; }

Multivector anticommutator(const Multivector& a, const Multivector& b) { return a * b + b * a; }

Multivector square(const Multivector& a) { return a * a; }

}  // namespace cliffbreak
