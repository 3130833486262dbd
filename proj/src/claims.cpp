#include "cliffbreak/claims.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "cliffbreak/expr.hpp"
#include "cliffbreak/lie.hpp"
#include "cliffbreak/structure.hpp"

namespace cliffbreak {

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    default: return "DISCREPANCY";
  }
}

namespace {

Multivector ev(const AlgebraDescriptor& d, const std::string& text) {
  return eval(parse(text), d);
}

std::vector<Multivector> evs(const AlgebraDescriptor& d, const std::vector<std::string>& texts) {
  std::vector<Multivector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(ev(d, t));
  return out;
}

/// Accumulates failed checks; the claim passes when none failed.
struct Checks {
  ClaimDetails details;
  bool ok = true;

  void require(bool cond, const std::string& note) {
    if (!cond) {
      ok = false;
      details.notes.push_back("failed: " + note);
    }
  }
  ClaimOutcome outcome() const {
    return {ok ? ClaimStatus::Pass : ClaimStatus::Fail, details};
  }
};

/// PASS if the literal statement holds, DISCREPANCY when only the corrected
/// reading does, FAIL when neither survives.
ClaimOutcome discrepancy_outcome(bool literal_ok, bool corrected_ok, ClaimDetails details) {
  ClaimStatus s = literal_ok        ? ClaimStatus::Pass
                  : corrected_ok    ? ClaimStatus::Discrepancy
                                    : ClaimStatus::Fail;
  return {s, std::move(details)};
}

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

std::string format_unit_scalar(std::uint8_t unit, const Rational& c) {
  if (unit == 0) return c.str();
  if (c == Rational(1)) return unit_name(unit);
  if (c == Rational(-1)) return std::string("-") + unit_name(unit);
  return c.str() + "*" + unit_name(unit);
}

AlgebraDescriptor dh() { return AlgebraDescriptor::dirac_h(); }
AlgebraDescriptor dc() { return AlgebraDescriptor::dirac_c(); }
AlgebraDescriptor cl(int p, int q) { return AlgebraDescriptor::generic(p, q); }

// ---------------------------------------------------------------------------
// C01: the classification block.

void add_classifications(std::vector<Claim>& v) {
  struct Row {
    int p, q;
    const char* cls;
  };
  static const Row kRows[] = {
      {2, 0, "M(2,R)"},          {0, 2, "H"},
      {3, 0, "M(2,C)"},          {0, 3, "H ⊕ H"},
      {3, 1, "M(4,R)"},          {1, 3, "M(2,H)"},
      {2, 3, "M(4,C)"},          {4, 1, "M(4,C)"},
      {0, 5, "M(4,C)"},          {3, 2, "M(4,R) ⊕ M(4,R)"},
      {5, 0, "M(2,H) ⊕ M(2,H)"}, {1, 4, "M(2,H) ⊕ M(2,H)"},
      {3, 3, "M(8,R)"},          {0, 6, "M(8,R)"},
      {4, 2, "M(8,R)"},          {6, 0, "M(4,H)"},
      {2, 4, "M(4,H)"},          {5, 1, "M(4,H)"},
      {1, 5, "M(4,H)"},
  };
  int n = 0;
  for (const Row& row : kRows) {
    ++n;
    char id[16];
    std::snprintf(id, sizeof id, "C01.%02d", n);
    std::string alg =
        "Cl(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")";
    std::string cls = row.cls;
    int p = row.p, q = row.q;
    v.push_back(Claim{
        id,
        alg + " classification: table and internal-structure classifier agree on " + cls,
        "stated isomorphism " + alg + " = " + cls,
        ClaimStatus::Pass,
        [p, q, cls, alg](const ClaimContext&) {
          Checks c;
          IsoClass table = classify_table(Signature{p, q});
          c.details.factors = table.str();
          c.require(table.str() == cls,
                    alg + " table class is " + table.str() + ", stated " + cls);
          IsoClass emp = classify_empirical(full_basis(cl(p, q)));
          c.require(emp == table, alg + " empirical class " + emp.str() +
                                      " disagrees with table " + table.str());
          return c.outcome();
        }});
  }
}

// ---------------------------------------------------------------------------
// C02: generator frames.

void add_frames(std::vector<Claim>& v) {
  struct Frame {
    const char* id;
    bool quaternionic;
    std::vector<std::string> gens;
    int plus, minus;
    const char* target;
  };
  static const std::vector<Frame> kFrames = {
      {"C02.01", false, {"g5", "i*g1", "i*g2", "i*g3", "i*g0"}, 4, 1, "Cl(4,1)"},
      {"C02.02", false, {"g1", "g2", "g3", "i*g0", "i*g5"}, 0, 5, "Cl(0,5)"},
      {"C02.03", false, {"g1", "g2", "g3", "g0", "g5"}, 2, 3, "Cl(2,3)"},
      {"C02.04", true, {"i*g1", "i*g2", "i*g3", "i*g0", "j", "k"}, 3, 3, "Cl(3,3)"},
      {"C02.05", true, {"g1", "g2", "g3", "g0", "j*g5", "k*g5"}, 3, 3, "Cl(3,3)"},
      {"C02.06", true, {"g1", "g2", "g3", "g5", "j*g5", "k*g5"}, 3, 3, "Cl(3,3)"},
      {"C02.07", true, {"g1", "g2", "g3", "i*g0", "j*g0", "k*g0"}, 0, 6, "Cl(0,6)"},
      {"C02.08", true, {"i*g1", "i*g2", "i*g3", "g0", "j*g0*g5", "k*g0*g5"}, 4, 2, "Cl(4,2)"},
  };
  for (const Frame& f : kFrames) {
    AlgebraDescriptor d = f.quaternionic ? dh() : dc();
    std::string gens_str;
    for (const auto& g : f.gens) gens_str += (gens_str.empty() ? "{" : ", ") + g;
    gens_str += "}";
    std::vector<std::string> gens = f.gens;
    Signature want{f.plus, f.minus};
    std::string target = f.target;
    v.push_back(Claim{
        f.id,
        "frame " + gens_str + " realizes " + target + " inside " + d.name(),
        "the set " + gens_str + " generates " + target + " and spans the whole algebra",
        ClaimStatus::Pass,
        [d, gens, want, target](const ClaimContext&) {
          Checks c;
          GeneratorReport rep = verify_generators(evs(d, gens));
          c.require(rep.pairwise_anticommute, "generators do not pairwise anticommute");
          c.require(rep.signature.has_value(), "generator squares are not all +/-1 scalars");
          if (rep.signature)
            c.require(*rep.signature == want, "signature is " + sig_str(*rep.signature) +
                                                  ", not " + sig_str(want));
          c.details.ranks.push_back(rep.generated_dimension);
          c.require(rep.generated_dimension == d.real_dim(),
                    "generated dimension " + std::to_string(rep.generated_dimension) +
                        " is not the full " + std::to_string(d.real_dim()));
          c.require(rep.full_algebra, "frame does not span the full algebra");
          return c.outcome();
        }});
  }

  struct PsFrame {
    const char* id;
    std::vector<std::string> gens;
    const char* target;   // expression proportional to the frame pseudoscalar
    const char* factor;   // exact factor
  };
  static const std::vector<PsFrame> kPs = {
      {"C02.09", {"g1", "g2", "g3", "g5", "j*g5", "k*g5"}, "g0", "-1"},
      {"C02.10", {"g1", "g2", "g3", "g0", "j*g5", "k*g5"}, "g5", "1"},
  };
  for (const PsFrame& f : kPs) {
    std::vector<std::string> gens = f.gens;
    std::string target = f.target, factor = f.factor;
    v.push_back(Claim{
        f.id,
        "pseudoscalar of the " + std::string(f.id == std::string("C02.09") ? "g5" : "g0") +
            "-style Cl(3,3) frame is proportional to " + target,
        "the ordered product of the frame generators equals a unit multiple of " + target,
        ClaimStatus::Pass,
        [gens, target, factor](const ClaimContext&) {
          Checks c;
          AlgebraDescriptor d = dh();
          GeneratorReport rep = verify_generators(evs(d, gens));
          auto pf = proportional_factor(rep.pseudoscalar, ev(d, target));
          c.require(pf.has_value(), "pseudoscalar " + rep.pseudoscalar.str() +
                                        " is not proportional to " + target);
          if (pf) {
            c.details.pseudoscalar_factor = format_unit_scalar(pf->first, pf->second);
            c.require(*c.details.pseudoscalar_factor == factor,
                      "factor is " + *c.details.pseudoscalar_factor + ", stated " + factor);
          }
          return c.outcome();
        }});
  }
}

// ---------------------------------------------------------------------------
// Commutation, squares and rewriting identities.

void add_identities(std::vector<Claim>& v) {
  v.push_back(Claim{
      "C03",
      "ring units j, k commute with g0..g3 and anticommute with g5",
      "j and k commute with the four grade-one generators but anticommute with g5",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        for (const char* u : {"j", "k"}) {
          Multivector m = ev(d, u);
          for (int mu = 0; mu <= 3; ++mu) {
            Multivector g = Multivector::generator(d, mu);
            c.require(commutator(m, g).is_zero(),
                      std::string(u) + " does not commute with g" + std::to_string(mu));
          }
          c.require(anticommutator(m, ev(d, "g5")).is_zero(),
                    std::string(u) + " does not anticommute with g5");
        }
        return c.outcome();
      }});

  v.push_back(Claim{
      "C04",
      "i, j, k, i*g5 square to -1; g5, j*g5, k*g5 square to +1",
      "the four rotation generators square to -1 and the three boost-like ones to +1",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        for (const char* s : {"i", "j", "k", "i*g5"})
          c.require(square(ev(d, s)) == Multivector::scalar(d, -1),
                    std::string(s) + " does not square to -1");
        for (const char* s : {"g5", "j*g5", "k*g5"})
          c.require(square(ev(d, s)) == Multivector::one(d),
                    std::string(s) + " does not square to +1");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C05",
      "g5 = i*g0*g1*g2*g3, j*g5 = -k*g0*g1*g2*g3, k*g5 = j*g0*g1*g2*g3",
      "rewriting the g5 triple over the grade-four blade exposes the i,j,k symmetry",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        c.require(ev(d, "g5") == ev(d, "i*g0*g1*g2*g3"), "g5 != i*g0*g1*g2*g3");
        c.require(ev(d, "j*g5") == -ev(d, "k*g0*g1*g2*g3"), "j*g5 != -k*g0*g1*g2*g3");
        c.require(ev(d, "k*g5") == ev(d, "j*g0*g1*g2*g3"), "k*g5 != j*g0*g1*g2*g3");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C10",
      "the grade-four blade squares to -1 in Cl(1,3) and Cl(3,1); g5 squares to +1",
      "the product of all four grade-one generators squares to -1 in both metric "
      "conventions, while the unit-adjusted g5 squares to +1",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        for (auto [p, q] : {std::pair{1, 3}, std::pair{3, 1}}) {
          AlgebraDescriptor d = cl(p, q);
          Multivector top = ev(d, "e1*e2*e3*e4");
          c.require(square(top) == Multivector::scalar(d, -1),
                    "top blade of " + d.name() + " does not square to -1");
        }
        AlgebraDescriptor d = dc();
        c.require(square(ev(d, "g5")) == Multivector::one(d), "g5*g5 != 1");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C13",
      "i*g5 anticommutes with every g-mu; i, j, k commute with every g-mu; "
      "the g-mu pairwise anticommute",
      "chirality relations: the unit-free grade-four element anticommutes with each "
      "grade-one generator, ring units commute with them, and the generators "
      "anticommute among themselves",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        Multivector ig5 = ev(d, "i*g5");
        for (int mu = 0; mu <= 3; ++mu) {
          Multivector g = Multivector::generator(d, mu);
          c.require(anticommutator(ig5, g).is_zero(),
                    "i*g5 does not anticommute with g" + std::to_string(mu));
          for (const char* u : {"i", "j", "k"})
            c.require(commutator(ev(d, u), g).is_zero(),
                      std::string(u) + " does not commute with g" + std::to_string(mu));
        }
        for (int mu = 0; mu <= 3; ++mu)
          for (int nu = mu + 1; nu <= 3; ++nu)
            c.require(anticommutator(Multivector::generator(d, mu),
                                     Multivector::generator(d, nu))
                          .is_zero(),
                      "g" + std::to_string(mu) + " and g" + std::to_string(nu) +
                          " do not anticommute");
        return c.outcome();
      }});
}

// ---------------------------------------------------------------------------
// Centralizer block.

void add_centralizers(std::vector<Claim>& v) {
  v.push_back(Claim{
      "C06",
      "centralizer of the even unit-free subalgebra: rank 8, generated by {j,k,g5}, "
      "carries Cl(1,2) and Cl(3,0) frames, class M(2,C)",
      "everything commuting with the even part of the grade algebra forms a rank-8 "
      "algebra generated by j, k, g5, presentable as Cl(1,2) or Cl(3,0), of class M(2,C)",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        // Unit-free even blades of the four grade-one generators.
        std::vector<Multivector> constraints;
        for (BladeMask m = 0; m < 16u; ++m)
          if (blade_grade(m) % 2 == 0) constraints.push_back(Multivector::blade(d, m));
        SubspaceBasis z = commutant(constraints, full_basis(d));
        c.details.ranks.push_back(z.rank());
        c.require(z.rank() == 8, "centralizer rank is " + std::to_string(z.rank()));
        SubspaceBasis gen = generated_subalgebra(evs(d, {"j", "k", "g5"}), true);
        c.require(gen == z, "subalgebra generated by {j,k,g5} differs from the centralizer");
        GeneratorReport r12 = verify_generators(evs(d, {"j", "k", "g5"}));
        c.require(r12.signature && *r12.signature == Signature{1, 2},
                  "triple {j,k,g5} does not carry signature (1,2)");
        GeneratorReport r30 = verify_generators(evs(d, {"j*g5", "k*g5", "g5"}));
        c.require(r30.signature && *r30.signature == Signature{3, 0},
                  "triple {j*g5,k*g5,g5} does not carry signature (3,0)");
        IsoClass cls = classify_empirical(z);
        c.details.factors = cls.str();
        c.require(cls.str() == "M(2,C)", "centralizer class is " + cls.str());
        return c.outcome();
      }});

  v.push_back(Claim{
      "C07-centralizer",
      "inside span{i,j,k}, the centralizer of g5 is exactly span{i}",
      "of the three ring units, only i commutes with g5",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        SubspaceBasis ambient = echelonize(d, evs(d, {"i", "j", "k"}));
        SubspaceBasis z = commutant({ev(d, "g5")}, ambient);
        c.details.ranks.push_back(z.rank());
        c.require(z.rank() == 1, "rank is " + std::to_string(z.rank()) + ", not 1");
        c.require(z.contains(ev(d, "i")), "centralizer does not contain i");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C07-literal",
      "literal reading: inside span{i,j,k} the centralizer of i*g5 is one-dimensional",
      "the phase generated by i*g5 commutes with only a one-parameter part of the "
      "{i,j,k} span",
      ClaimStatus::Discrepancy,
      [](const ClaimContext&) {
        AlgebraDescriptor d = dh();
        SubspaceBasis ambient = echelonize(d, evs(d, {"i", "j", "k"}));
        SubspaceBasis zl = commutant({ev(d, "i*g5")}, ambient);
        SubspaceBasis zc = commutant({ev(d, "g5")}, ambient);
        ClaimDetails details;
        details.ranks = {zl.rank(), zc.rank()};
        details.notes.push_back("i*g5 = " + ev(d, "i*g5").str() +
                                " is unit-free, so it commutes with all of i, j, k; its "
                                "centralizer in span{i,j,k} has rank " +
                                std::to_string(zl.rank()));
        details.notes.push_back("replacing i*g5 by g5 gives the stated rank-1 centralizer "
                                "span{i}");
        bool literal_ok = zl.rank() == 1;
        bool corrected_ok = zc.rank() == 1 && zc.contains(ev(d, "i"));
        return discrepancy_outcome(literal_ok, corrected_ok, std::move(details));
      }});
}

// ---------------------------------------------------------------------------
// Ideal triples.

void add_ideals(std::vector<Claim>& v) {
  v.push_back(Claim{
      "C08",
      "the two mixed-grade triples in Cl(0,3) generate commuting rank-4 ideals, "
      "each of class H, intersecting trivially, with combined Lie dimension 6",
      "the sums of each generator with the opposite-orientation bivector cut the "
      "algebra into two quaternion ideals meeting only in zero",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = cl(0, 3);
        auto t1 = evs(d, {"e1 + e2*e3", "e2 + e3*e1", "e3 + e1*e2"});
        auto t2 = evs(d, {"e1 + e3*e2", "e2 + e1*e3", "e3 + e2*e1"});
        SubspaceBasis i1 = generated_subalgebra(t1, false);
        SubspaceBasis i2 = generated_subalgebra(t2, false);
        c.details.ranks = {i1.rank(), i2.rank()};
        c.require(i1.rank() == 4, "first ideal rank " + std::to_string(i1.rank()));
        c.require(i2.rank() == 4, "second ideal rank " + std::to_string(i2.rank()));
        IsoClass c1 = classify_empirical(i1), c2 = classify_empirical(i2);
        c.details.factors = c1.str();
        c.require(c1.str() == "H", "first ideal class " + c1.str());
        c.require(c2.str() == "H", "second ideal class " + c2.str());
        bool commute = true;
        for (const Multivector& x : i1.rows())
          for (const Multivector& y : i2.rows())
            if (!commutator(x, y).is_zero()) commute = false;
        c.require(commute, "ideals do not commute elementwise");
        long meet = intersect(i1, i2).rank();
        c.details.ranks.push_back(meet);
        c.require(meet == 0, "ideals intersect in rank " + std::to_string(meet));
        std::vector<Multivector> both = t1;
        both.insert(both.end(), t2.begin(), t2.end());
        LieBasis l = lie_closure(both);
        c.details.ranks.push_back(l.dimension());
        c.require(l.dimension() == 6,
                  "combined Lie dimension " + std::to_string(l.dimension()));
        return c.outcome();
      }});

  // The two quaternion triples inside the even part of the Cl(4,0) frame
  // {g0, i*g1, i*g2, i*g3} of the complex Dirac algebra, separated by the
  // idempotents (1 +/- g5)/2. Halved, each triple satisfies the quaternion
  // relations inside its ideal.
  auto corrected_checks = [](Checks& c) {
    AlgebraDescriptor d = dc();
    Multivector pp = ev(d, "(1 + g5)/2"), pm = ev(d, "(1 - g5)/2");
    auto plus = evs(d, {"(g1*g2 + i*g0*g3)/2", "(g2*g3 + i*g0*g1)/2", "(g3*g1 + i*g0*g2)/2"});
    auto minus = evs(d, {"(g1*g2 - i*g0*g3)/2", "(g2*g3 - i*g0*g1)/2", "(g3*g1 - i*g0*g2)/2"});
    SubspaceBasis even = even_part(d);
    for (int a = 0; a < 3; ++a) {
      c.require(even.contains(plus[a]) && even.contains(minus[a]),
                "triple element is not even-grade");
      c.require(square(plus[a]) == -pm, "halved generator squares to " +
                                            square(plus[a]).str() + ", not -(1-g5)/2");
      c.require(square(minus[a]) == -pp, "opposite triple squares to " +
                                             square(minus[a]).str() + ", not -(1+g5)/2");
      c.require((plus[a] * pp).is_zero(), "first triple is not killed by (1+g5)/2");
      c.require((minus[a] * pm).is_zero(), "second triple is not killed by (1-g5)/2");
    }
    c.require(plus[0] * plus[1] == plus[2], "u1*u2 != u3 in the first triple");
    c.require(plus[1] * plus[2] == plus[0], "u2*u3 != u1 in the first triple");
    c.require(plus[2] * plus[0] == plus[1], "u3*u1 != u2 in the first triple");
    c.require(minus[0] * minus[1] == minus[2], "u1*u2 != u3 in the second triple");
    c.require(minus[1] * minus[2] == minus[0], "u2*u3 != u1 in the second triple");
    c.require(minus[2] * minus[0] == minus[1], "u3*u1 != u2 in the second triple");
  };

  v.push_back(Claim{
      "C09-corrected",
      "corrected even-part triples with third generator (g3*g1 + i*g0*g2)/2 satisfy "
      "the quaternion relations in the ideals cut by (1 +/- g5)/2",
      "two bivector triples, halved, act as quaternion units inside the two chiral "
      "ideals of the even subalgebra",
      ClaimStatus::Pass,
      [corrected_checks](const ClaimContext&) {
        Checks c;
        corrected_checks(c);
        return c.outcome();
      }});

  v.push_back(Claim{
      "C09-literal",
      "literal reading: the third generator of the first triple is g3*g1 + i*g2",
      "the stated triple closes multiplicatively with third element g3*g1 + i*g2",
      ClaimStatus::Discrepancy,
      [corrected_checks](const ClaimContext&) {
        AlgebraDescriptor d = dc();
        Multivector u1 = ev(d, "g1*g2 + i*g0*g3");
        Multivector u2 = ev(d, "g2*g3 + i*g0*g1");
        Multivector lit = ev(d, "g3*g1 + i*g2");
        Multivector prod = u1 * u2;
        ClaimDetails details;
        bool literal_ok = prod == lit * Rational(2);
        details.notes.push_back("(g1*g2 + i*g0*g3)*(g2*g3 + i*g0*g1) = " + prod.str() +
                                " = 2*(g3*g1 + i*g0*g2), not 2*(g3*g1 + i*g2)");
        details.notes.push_back("g3*g1 + i*g2 mixes grades 2 and 1, so it cannot lie in "
                                "the even subalgebra containing the other generators");
        Checks corr;
        corrected_checks(corr);
        return discrepancy_outcome(literal_ok, corr.ok, std::move(details));
      }});
}

// ---------------------------------------------------------------------------
// Even parts, parameter counting, subalgebra splitting.

void add_structure_claims(std::vector<Claim>& v) {
  v.push_back(Claim{
      "C11",
      "even Cl(3,1) and even Cl(1,3) are both M(2,C); even Cl(4,0) is H + H; "
      "(1 +/- e1*e2*e3)/2 are orthogonal idempotents in Cl(0,3)",
      "the even subalgebras of the two metric conventions agree, the Euclidean "
      "four-dimensional one splits quaternionically, and the Cl(0,3) top blade "
      "yields complementary projections",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        IsoClass e31 = classify_empirical(even_part(cl(3, 1)));
        IsoClass e13 = classify_empirical(even_part(cl(1, 3)));
        c.require(e31 == e13, "even Cl(3,1) is " + e31.str() + " but even Cl(1,3) is " +
                                  e13.str());
        c.require(e31.str() == "M(2,C)", "even Cl(3,1) is " + e31.str() + ", not M(2,C)");
        IsoClass e40 = classify_empirical(even_part(cl(4, 0)));
        c.details.factors = e40.str();
        c.require(e40.str() == "H ⊕ H", "even Cl(4,0) is " + e40.str() + ", not H ⊕ H");
        AlgebraDescriptor d = cl(0, 3);
        Multivector pp = ev(d, "(1 + e1*e2*e3)/2"), pm = ev(d, "(1 - e1*e2*e3)/2");
        c.require(pp * pp == pp, "(1+e123)/2 is not idempotent");
        c.require(pm * pm == pm, "(1-e123)/2 is not idempotent");
        c.require((pp * pm).is_zero() && (pm * pp).is_zero(),
                  "the two projections are not orthogonal");
        c.require(pp + pm == Multivector::one(d), "projections do not sum to 1");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C12",
      "mixing-parameter ranks: 21 cross products, 4 pseudoscalar products, "
      "union 25, plus the rotation triplet 28",
      "products of the three nonscalar grade representatives with the seven "
      "non-identity elements of the unit algebra span 21 dimensions, the "
      "pseudoscalar line spans 4 more, and the rotation bivectors are "
      "independent of all 25",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        auto reps = evs(d, {"g3", "g1*g2", "g1*g2*g3"});
        auto units7 = evs(d, {"i", "j", "k", "g5", "i*g5", "j*g5", "k*g5"});
        std::vector<Multivector> cross;
        for (const Multivector& x : reps)
          for (const Multivector& y : units7) cross.push_back(x * y);
        long r21 = echelonize(d, cross).rank();
        auto four = evs(d, {"g5", "i*g5", "j*g5", "k*g5"});
        long r4 = echelonize(d, four).rank();
        std::vector<Multivector> all = cross;
        all.insert(all.end(), four.begin(), four.end());
        long r25 = echelonize(d, all).rank();
        auto triplet = evs(d, {"g1*g2", "g2*g3", "g3*g1"});
        all.insert(all.end(), triplet.begin(), triplet.end());
        long r28 = echelonize(d, all).rank();
        c.details.ranks = {r21, r4, r25, r28};
        c.require(r21 == 21, "cross-product rank " + std::to_string(r21));
        c.require(r4 == 4, "pseudoscalar-line rank " + std::to_string(r4));
        c.require(r25 == 25, "union rank " + std::to_string(r25));
        c.require(r28 == 28, "rank with rotation triplet " + std::to_string(r28));
        return c.outcome();
      }});

  v.push_back(Claim{
      "C15",
      "a signature-(3,2) subframe of the Cl(3,3) frame generates a 32-dimensional "
      "subalgebra splitting into two commuting M(4,R) ideals; Cl(4,3) and Cl(4,4) "
      "classify as two copies of M(8,R) and as M(16,R)",
      "dropping one generator from the six-element frame cuts out Cl(3,2), a sum of "
      "two real matrix algebras, matching the one- and two-step extensions",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        AlgebraDescriptor d = dh();
        auto gens = evs(d, {"g1", "g2", "g5", "j*g5", "k*g5"});
        GeneratorReport rep = verify_generators(gens);
        c.require(rep.signature && *rep.signature == Signature{3, 2},
                  "subframe signature is not (3,2)");
        SubspaceBasis s = generated_subalgebra(gens, true);
        c.details.ranks.push_back(s.rank());
        c.require(s.rank() == 32, "generated rank " + std::to_string(s.rank()));
        auto [left, right] = idempotent_split(s, rep.pseudoscalar);
        c.details.ranks.push_back(left.rank());
        c.details.ranks.push_back(right.rank());
        c.require(left.rank() == 16 && right.rank() == 16, "ideal ranks are not 16/16");
        bool commute = true;
        for (const Multivector& x : left.rows())
          for (const Multivector& y : right.rows())
            if (!commutator(x, y).is_zero()) commute = false;
        c.require(commute, "the two ideals do not commute elementwise");
        IsoClass cl_left = classify_empirical(left), cl_right = classify_empirical(right);
        c.details.factors = cl_left.str();
        c.require(cl_left.str() == "M(4,R)", "left ideal class " + cl_left.str());
        c.require(cl_right.str() == "M(4,R)", "right ideal class " + cl_right.str());
        c.require(classify_table(Signature{4, 3}).str() == "M(8,R) ⊕ M(8,R)",
                  "Cl(4,3) table entry is not M(8,R) ⊕ M(8,R)");
        c.require(classify_table(Signature{4, 4}).str() == "M(16,R)",
                  "Cl(4,4) table entry is not M(16,R)");
        return c.outcome();
      }});

  v.push_back(Claim{
      "C16",
      "Cl(2,3) is M(4,C), the class of the complex Dirac algebra",
      "the five-generator algebra with two plus signs matches the complexified "
      "grade algebra as 4x4 complex matrices",
      ClaimStatus::Pass,
      [](const ClaimContext&) {
        Checks c;
        IsoClass table = classify_table(Signature{2, 3});
        IsoClass emp = classify_empirical(full_basis(cl(2, 3)));
        IsoClass dirac = classify_empirical(full_basis(dc()));
        c.details.factors = table.str();
        c.require(table.str() == "M(4,C)", "table class " + table.str());
        c.require(emp == table, "empirical class " + emp.str());
        c.require(dirac == table, "complex Dirac algebra class " + dirac.str());
        return c.outcome();
      }});
}

// ---------------------------------------------------------------------------
// C14: real-form verdicts.

void add_real_forms(std::vector<Claim>& v) {
  struct Entry {
    const char* id;
    bool canonical51;
    std::vector<std::string> gens;
    const char* name;
    Inertia inertia;
  };
  static const std::vector<Entry> kEntries = {
      {"C14.01", false, {"i*g1", "i*g2", "i*g3", "i*g0", "j", "k"}, "sl(4,R)", {9, 6, 0}},
      {"C14.02", false, {"g1", "g2", "g3", "i*g0", "j*g0", "k*g0"}, "su(4)", {0, 15, 0}},
      {"C14.03",
       false,
       {"i*g1", "i*g2", "i*g3", "g0", "j*g0*g5", "k*g0*g5"},
       "su(2,2)",
       {8, 7, 0}},
      {"C14.04", true, {"e1", "e2", "e3", "e4", "e5", "e6"}, "sl(2,H)", {5, 10, 0}},
  };
  for (const Entry& e : kEntries) {
    AlgebraDescriptor d = e.canonical51 ? cl(5, 1) : dh();
    std::vector<std::string> gens = e.gens;
    std::string name = e.name;
    Inertia want = e.inertia;
    v.push_back(Claim{
        e.id,
        "bivector Lie algebra of the " + std::string(e.canonical51 ? "canonical Cl(5,1)"
                                                                   : "Cl(3,3)-family") +
            " frame has Killing inertia " + std::to_string(want.plus) + "+/" +
            std::to_string(want.minus) + "- and real form " + name,
        "the rotation Lie algebra of the frame is " + name,
        ClaimStatus::Pass,
        [d, gens, name, want](const ClaimContext&) {
          Checks c;
          LieBasis l = bivector_algebra(evs(d, gens));
          RealFormVerdict verdict = killing_verdict(l);
          c.details.ranks.push_back(verdict.dimension);
          c.details.inertia = verdict.inertia;
          c.require(verdict.dimension == 15,
                    "dimension " + std::to_string(verdict.dimension) + ", not 15");
          c.require(verdict.inertia == want, "Killing inertia (" +
                                                 std::to_string(verdict.inertia.plus) + "," +
                                                 std::to_string(verdict.inertia.minus) +
                                                 ") does not match");
          c.require(verdict.name && *verdict.name == name,
                    "catalogue verdict is " +
                        (verdict.name ? *verdict.name : std::string("UNKNOWN_FORM")));
          return c.outcome();
        }});
  }
}

}  // namespace

const std::vector<Claim>& claim_catalogue() {
  static const std::vector<Claim> kCatalogue = [] {
    std::vector<Claim> v;
    add_classifications(v);
    add_frames(v);
    add_identities(v);
    add_centralizers(v);
    add_ideals(v);
    add_structure_claims(v);
    add_real_forms(v);
    std::sort(v.begin(), v.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return v;
  }();
  return kCatalogue;
}

std::vector<ClaimResult> run_claims(const std::string& filter, const ClaimContext& ctx) {
  std::vector<ClaimResult> out;
  for (const Claim& c : claim_catalogue()) {
    if (c.id.rfind(filter, 0) != 0) continue;
    ClaimResult r{c.id, ClaimStatus::Fail, c.source, {}};
    try {
      ClaimOutcome o = c.program(ctx);
      r.status = o.status;
      r.details = std::move(o.details);
    } catch (const std::exception& e) {
      r.details.notes.push_back(std::string("exception: ") + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cliffbreak
