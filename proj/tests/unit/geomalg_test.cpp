#include <doctest.h>

#include <map>

#include "curves.hpp"
#include "printers.hpp"
#include "typeec/errors.hpp"
#include "typeec/geomalg/hilbert.hpp"
#include "typeec/geomalg/pair.hpp"
#include "typeec/geomalg/paut.hpp"
#include "typeec/hesse/loci.hpp"

using namespace typeec::geomalg;
using typeec::exactfield::default_tower;
using typeec::hesse::CurveSubset;
using typeec::tensor::LinMap;
using typeec::testing::curve_generic;
using typeec::testing::curve_j0;
using typeec::testing::curve_j1728;

namespace {

const auto& dt = default_tower();
constexpr int X = 0, Y = 1, Z = 2;

FieldElement eta(int k) { return dt.eta.pow(k); }

Tensor2 mono2(int i, int j, const FieldElement& c = FieldElement(1)) {
  Tensor2 t;
  t(i, j) = c;
  return t;
}

std::vector<const HesseCurve*> all_curves() { return {&curve_generic(), &curve_j0(), &curve_j1728()}; }

ProjPoint eval(const std::array<HomPoly, 3>& s, const ProjPoint& q) {
  return ProjPoint(s[0].eval(q.coords()), s[1].eval(q.coords()), s[2].eval(q.coords()));
}

bool all_zero(const std::array<HomPoly, 3>& s, const ProjPoint& q) {
  return s[0].eval(q.coords()).is_zero() && s[1].eval(q.coords()).is_zero() && s[2].eval(q.coords()).is_zero();
}

// The regular representatives of each exponent class, as listed in the
// classification table.
std::vector<PairDescriptor> table_representatives() {
  std::vector<PairDescriptor> out;
  for (const auto& p : curve_generic().two_torsion_list())
    if (p != curve_generic().identity()) out.emplace_back(curve_generic(), p, 1);
  out.emplace_back(curve_j0(), curve_j0().two_torsion_list()[1], 3);
  out.emplace_back(curve_j0(), typeec::hesse::order_nine_base(), 2);
  out.emplace_back(curve_j0(), typeec::hesse::order_nine_base(), 4);
  const auto& h = curve_j1728();
  out.emplace_back(h, ProjPoint(1, 1, h.lambda()), 2);
  out.emplace_back(h, h.two_torsion_list()[2], 2);
  out.emplace_back(h, ProjPoint(1, 1, h.lambda()), 1);
  out.emplace_back(h, ProjPoint(1, 1, h.lambda()), 3);
  return out;
}

}  // namespace

TEST_CASE("homogeneous polynomials") {
  const HomPoly x = HomPoly::variable(X), y = HomPoly::variable(Y), z = HomPoly::variable(Z);
  const HomPoly p = x * y + FieldElement(2) * (z * z);
  CHECK(p.degree() == 2);
  CHECK(p.at(1, 1, 0) == FieldElement(1));
  CHECK(p.at(0, 0, 2) == FieldElement(2));
  CHECK(p.eval({FieldElement(3), FieldElement(5), FieldElement(1)}) == FieldElement(17));
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(p + x, typeec::InvalidArgument);
  const HomPoly g = HomPoly::hesse_cubic(FieldElement(2));
  CHECK(g == x * x * x + y * y * y + z * z * z - FieldElement(6) * (x * y * z));
  for (const auto* c : all_curves())
    for (const auto& q : c->torsion(6).points()) CHECK(HomPoly::hesse_cubic(c->lambda()).eval(q.coords()).is_zero());
}

TEST_CASE("pair descriptors") {
  const auto& c = curve_j0();
  CHECK_THROWS_AS(PairDescriptor(c, ProjPoint(1, 2, 3), 0), typeec::InvalidArgument);
  const PairDescriptor d(c, typeec::hesse::order_nine_base(), 8);
  CHECK(d.exponent() == 2);
  CHECK(PairDescriptor(c, c.identity(), -1).exponent() == 5);
  // sigma(o_E) = tau^2(o_E) + p = p.
  CHECK(d.sigma(c.identity()) == d.point());
}

TEST_CASE("sigma as quadratic forms") {
  SUBCASE("translation by the identity") {
    for (const auto* c : all_curves()) {
      const PairDescriptor d(*c, c->identity(), 0);
      for (const auto& q : c->torsion(6).points())
        for (int branch : {1, 2})
          if (!all_zero(sigma_as_quadratic(d, branch), q)) CHECK(eval(sigma_as_quadratic(d, branch), q) == q);
    }
  }
  SUBCASE("order-nine pair at the identity") {
    const PairDescriptor d(curve_j0(), typeec::hesse::order_nine_base(), 2);
    CHECK(eval(sigma_as_quadratic(d, 1), curve_j0().identity()) == d.point());
  }
  SUBCASE("branch 1 vanishes at o_E for a point with c = 0") {
    const PairDescriptor d(curve_j0(), ProjPoint(FieldElement(1), -dt.eps, FieldElement(0)), 0);
    CHECK(all_zero(sigma_as_quadratic(d, 1), curve_j0().identity()));
    CHECK(eval(sigma_as_quadratic(d, 2), curve_j0().identity()) == d.point());
  }
  SUBCASE("agreement with the group law on E[6]") {
    for (const auto& d : table_representatives()) {
      const auto s1 = sigma_as_quadratic(d, 1), s2 = sigma_as_quadratic(d, 2);
      for (const auto& q : d.curve().torsion(6).points()) {
        const ProjPoint expected = d.sigma(q);
        if (!all_zero(s1, q)) CHECK(eval(s1, q) == expected);
        if (!all_zero(s2, q)) CHECK(eval(s2, q) == expected);
        CHECK(!(all_zero(s1, q) && all_zero(s2, q)));
      }
    }
  }
  CHECK_THROWS_AS(sigma_as_quadratic(PairDescriptor(curve_j0(), curve_j0().identity(), 0), 3), typeec::InvalidArgument);
}

TEST_CASE("relation spaces are canonical") {
  const RelationSpace a({mono2(X, Y) + mono2(Y, X), FieldElement(2) * mono2(X, Y)});
  const RelationSpace b({mono2(Y, X), mono2(X, Y, FieldElement(-3))});
  CHECK(a == b);
  CHECK(a.dimension() == 2);
  CHECK(a.basis()[0] == mono2(X, Y));
  CHECK(RelationSpace({Tensor2()}).dimension() == 0);
}

TEST_CASE("relations of the order-nine pair") {
  const PairDescriptor d(curve_j0(), typeec::hesse::order_nine_base(), 2);
  const RelationSpace displayed({mono2(Z, X) + mono2(X, Z, eta(8)) + mono2(Y, Y, eta(4)),
                                 mono2(X, Y) + mono2(Y, X, eta(5)) + mono2(Z, Z, eta(7)),
                                 mono2(X, X, eta(1)) + mono2(Y, Z) + mono2(Z, Y, eta(2))});
  CHECK(relations_from_pair(d) == displayed);
}

TEST_CASE("relations of Sklyanin pairs") {
  for (const auto* c : all_curves()) {
    for (const auto& p : c->torsion(6).points()) {
      if (p.has_zero_coordinate()) continue;
      const auto& [a, b, cc] = p.coords();
      const RelationSpace expected({mono2(Y, Z, a) + mono2(Z, Y, b) + mono2(X, X, cc),
                                    mono2(Z, X, a) + mono2(X, Z, b) + mono2(Y, Y, cc),
                                    mono2(X, Y, a) + mono2(Y, X, b) + mono2(Z, Z, cc)});
      const RelationSpace found = relations_from_pair(PairDescriptor(*c, p, 0));
      CHECK(found == expected);
      CHECK(found == derivation_quotient_relations(typeec::tensor::sklyanin(p)));
    }
  }
}

TEST_CASE("relations of a twisted pair match the twisted potential") {
  const auto& c = curve_generic();
  const ProjPoint p(1, 1, 2);
  const RelationSpace r = relations_from_pair(PairDescriptor(c, p, 1));
  CHECK(r.dimension() == 3);
  const auto w = typeec::tensor::ms_twist(typeec::tensor::sklyanin(p), LinMap(c.automorphism(1).matrix));
  CHECK(r == derivation_quotient_relations(w));
}

TEST_CASE("both addition formulas give the same relations") {
  for (const auto& d : table_representatives()) {
    CAPTURE(d.point());
    CHECK(relations_from_branch(d, 1) == relations_from_branch(d, 2));
    CHECK(relations_from_branch(d, 1) == relations_from_pair(d));
  }
}

TEST_CASE("derivation quotient relations") {
  CHECK(derivation_quotient_relations(Tensor3()).dimension() == 0);
  const Tensor3 s = Tensor3::monomial(X, Y, Z) + Tensor3::monomial(Y, Z, X) + Tensor3::monomial(Z, X, Y);
  CHECK(derivation_quotient_relations(s) == RelationSpace({mono2(Y, Z), mono2(Z, X), mono2(X, Y)}));
}

TEST_CASE("fibers of the relation space are the graph of sigma") {
  SUBCASE("examples") {
    const auto& c = curve_generic();
    const PairDescriptor sk(c, ProjPoint(1, 1, 2), 0);
    CHECK(fiber_at(relations_from_pair(sk), c.identity()) == sk.point());

    const PairDescriptor e(curve_j0(), typeec::hesse::order_nine_base(), 2);
    const ProjPoint r(FieldElement(1), -dt.eps, FieldElement(0));
    const ProjPoint expected = curve_j0().add(curve_j0().automorphism(2).apply(r), e.point());
    CHECK(fiber_at(relations_from_pair(e), r) == expected);

    const auto& h = curve_j1728();
    const ProjPoint p1(1, 1, h.lambda());
    const PairDescriptor hp(h, p1, 1);
    CHECK(fiber_at(relations_from_pair(hp), p1) == h.add(h.automorphism(1).apply(p1), p1));
  }
  SUBCASE("all of E[6] for every representative") {
    for (const auto& d : table_representatives()) {
      const RelationSpace rel = relations_from_pair(d);
      for (const auto& r : d.curve().torsion(6).points()) CHECK(fiber_at(rel, r) == d.sigma(r));
    }
  }
  SUBCASE("degenerate relation spaces") {
    CHECK_THROWS_AS(fiber_at(RelationSpace(), curve_j0().identity()), typeec::FiberNotPoint);
    const RelationSpace free_x({mono2(X, X), mono2(Y, X), mono2(Z, X)});
    CHECK_THROWS_AS(fiber_at(free_x, ProjPoint(1, 1, 1)), typeec::FiberNotPoint);
  }
}

TEST_CASE("regularity") {
  const auto& c0 = curve_j0();
  CHECK(is_regular_pair(PairDescriptor(c0, typeec::hesse::order_nine_base(), 2)));
  for (const auto& p : c0.torsion(6).points()) {
    if (p.has_zero_coordinate()) continue;
    CHECK(!is_regular_pair(PairDescriptor(c0, p, 1)));
    CHECK(!is_regular_pair(PairDescriptor(c0, p, 5)));
    CHECK(is_regular_pair(PairDescriptor(c0, p, 0)));
    CHECK(is_regular_pair(PairDescriptor(c0, p, 3)));
  }
  for (const auto* c : all_curves()) {
    CHECK(!is_regular_pair(PairDescriptor(*c, ProjPoint(FieldElement(1), -dt.eps, FieldElement(0)), 0)));
    // Regular pairs are exactly U_{tau^i} minus E[3] on the sampled points.
    for (int i = 0; i < c->auto_order(); ++i) {
      const CurveSubset u = typeec::hesse::u_lower_among(*c, i, c->torsion(6));
      for (const auto& p : c->torsion(6).points())
        CHECK(is_regular_pair(PairDescriptor(*c, p, i)) == (u.contains(p) && !p.has_zero_coordinate()));
    }
  }
}

TEST_CASE("regular pairs have 3-dimensional relation spaces") {
  const auto& c = curve_j0();
  for (int i = 0; i < c.auto_order(); ++i)
    for (const auto& p : c.torsion(6).points()) {
      const PairDescriptor d(c, p, i);
      if (is_regular_pair(d)) CHECK(relations_from_pair(d).dimension() == 3);
    }
}

TEST_CASE("isomorphism of pairs") {
  const auto& g = curve_generic();
  const auto& e2 = g.two_torsion_list();
  CHECK(pairs_isomorphic(PairDescriptor(g, ProjPoint(1, 1, 2), 1), PairDescriptor(g, ProjPoint(1, 1, 2), 1)));
  const ProjPoint other(FieldElement(1), FieldElement(1), FieldElement(-1) + FieldElement::generator(g.tower()));
  REQUIRE(g.contains(other));
  CHECK(!pairs_isomorphic(PairDescriptor(g, ProjPoint(1, 1, 2), 1), PairDescriptor(g, other, 1)));
  CHECK(!pairs_isomorphic(PairDescriptor(g, e2[1], 1), PairDescriptor(g, e2[1], 0)));

  const auto& c0 = curve_j0();
  const ProjPoint p1(FieldElement(1), FieldElement(1), -dt.cbrt2);
  const ProjPoint p2(FieldElement(1), FieldElement(1), -dt.cbrt2 * dt.eps);
  CHECK(pairs_isomorphic(PairDescriptor(c0, p1, 3), PairDescriptor(c0, p2, 3)));
  CHECK(c0.automorphism(4).apply(p1) == p2);
}

TEST_CASE("isomorphism is an equivalence relation on each enumerated family") {
  for (const auto* c : all_curves()) {
    for (int i = 1; i < c->auto_order(); ++i) {
      std::vector<ProjPoint> family;
      const CurveSubset u = typeec::hesse::u_lower(*c, i);
      for (const auto& p : u.points())
        if (is_regular_pair(PairDescriptor(*c, p, i))) family.push_back(p);
      std::map<ProjPoint, CurveSubset> orbit;
      for (const auto& p : family) orbit.emplace(p, isomorphism_orbit(PairDescriptor(*c, p, i)));
      for (const auto& p : family) {
        CHECK(orbit.at(p).contains(p));
        for (const auto& q : family) {
          CHECK(orbit.at(p).contains(q) == orbit.at(q).contains(p));
          // Transitivity: related points have identical orbits on the family.
          if (orbit.at(p).contains(q))
            for (const auto& r : family) CHECK(orbit.at(p).contains(r) == orbit.at(q).contains(r));
        }
      }
    }
  }
}

TEST_CASE("Hilbert dimensions") {
  const RelationSpace commutative(
      {mono2(X, Y) - mono2(Y, X), mono2(Y, Z) - mono2(Z, Y), mono2(Z, X) - mono2(X, Z)});
  CHECK(hilbert_dims(commutative, 5) == std::vector<std::size_t>{1, 3, 6, 10, 15, 21});
  const RelationSpace degenerate({mono2(X, Y), mono2(Y, X), mono2(X, X)});
  const auto dims = hilbert_dims(degenerate, 3);
  CHECK(dims[2] == 6);
  CHECK(dims[3] != 10);
  CHECK(hilbert_dims(RelationSpace(), 4) == std::vector<std::size_t>{1, 3, 9, 27, 81});
  CHECK_THROWS_AS(hilbert_dims(commutative, 6), typeec::InvalidArgument);
  for (const auto& d : table_representatives()) {
    CAPTURE(d.point());
    CAPTURE(d.exponent());
    CHECK(hilbert_dims(relations_from_pair(d), 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
    const PairDescriptor mirror(d.curve(), d.point(), d.curve().auto_order() - d.exponent());
    CHECK(hilbert_dims(relations_from_pair(mirror), 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
  }
}

TEST_CASE("recovering the potential from the relations") {
  for (const auto& d : table_representatives()) {
    const RelationSpace rel = relations_from_pair(d);
    const auto w = potential_from_relations(rel);
    REQUIRE(w.has_value());
    CHECK(derivation_quotient_relations(*w) == rel);
  }
  CHECK(!potential_from_relations(RelationSpace()).has_value());
}

TEST_CASE("membership in PAut") {
  const LinMap s1(typeec::hesse::translation_p1()), s2(typeec::hesse::translation_p2());
  for (const auto* c : all_curves())
    for (const auto& p : c->torsion(6).points())
      if (!p.has_zero_coordinate()) {
        CHECK(paut_membership(p, s1));
        CHECK(paut_membership(p, s2));
      }
  const auto& c0 = curve_j0();
  const ProjPoint p(FieldElement(1), FieldElement(1), -dt.cbrt2);
  CHECK(paut_membership(p, LinMap(c0.automorphism(3).matrix)));
  CHECK(!paut_membership(p, LinMap(c0.automorphism(1).matrix)));
  const auto& h = curve_j1728();
  CHECK(paut_membership(ProjPoint(1, 1, h.lambda()), LinMap(h.automorphism(1).matrix)));
  CHECK(!paut_membership(h.two_torsion_list()[2], LinMap(h.automorphism(1).matrix)));
}

TEST_CASE("PAut group sizes") {
  for (const auto* c : all_curves()) {
    for (const auto& p : c->torsion(6).points()) {
      if (p.has_zero_coordinate()) continue;
      std::size_t expected = c->torsion(2).contains(p) ? 18 : 9;
      if (c->auto_kind() == typeec::hesse::AutoKind::tau3 && p == ProjPoint(1, 1, c->lambda())) expected = 36;
      CAPTURE(p);
      CHECK(paut_group(*c, p).size() == expected);
    }
  }
  const auto& h = curve_j1728();
  for (const auto& g : paut_group(h, ProjPoint(1, 1, h.lambda()))) CHECK(h.torsion(3).contains(g.translation));
}

TEST_CASE("twists of Sklyanin algebras never reach Type E") {
  const auto result = verify_type_e_not_twist(curve_j0());
  CHECK(result.confirmed);
  CHECK(result.samples.size() == 28);
  std::set<int> seen;
  for (const auto& s : result.samples) {
    CHECK(s.disjoint);
    seen.insert(s.exponents.begin(), s.exponents.end());
  }
  CHECK(seen == std::set<int>{0, 3});
  CHECK(result.samples.back().base == typeec::hesse::order_nine_base());
  CHECK(result.samples.back().exponents == std::set<int>{0});
  CHECK_THROWS_AS(verify_type_e_not_twist(curve_generic()), typeec::InvalidArgument);
}
