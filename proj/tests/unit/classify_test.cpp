#include <doctest.h>

#include <algorithm>

#include "curves.hpp"
#include "printers.hpp"
#include "typeec/geomalg/classify.hpp"
#include "typeec/geomalg/hilbert.hpp"
#include "typeec/hesse/loci.hpp"

using namespace typeec::geomalg;
using typeec::exactfield::default_tower;
using typeec::hesse::AutoKind;
using typeec::testing::curve_generic;
using typeec::testing::curve_j0;
using typeec::testing::curve_j1728;

namespace {

const auto& dt = default_tower();

const Classification& report_for(const HesseCurve& c) {
  static std::map<const HesseCurve*, Classification> cache;
  auto it = cache.find(&c);
  if (it == cache.end()) it = cache.emplace(&c, classify(c)).first;
  return it->second;
}

std::vector<const TypeClass*> of_tag(const Classification& r, TypeTag tag) {
  std::vector<const TypeClass*> out;
  for (const auto& k : r.classes)
    if (k.tag == tag) out.push_back(&k);
  return out;
}

}  // namespace

TEST_CASE("type tags") {
  CHECK(type_of(AutoKind::tau1, 0) == TypeTag::A);
  CHECK(type_of(AutoKind::tau1, 1) == TypeTag::B);
  CHECK(type_of(AutoKind::tau2, 3) == TypeTag::B);
  CHECK(type_of(AutoKind::tau2, 2) == TypeTag::E);
  CHECK(type_of(AutoKind::tau2, 4) == TypeTag::E);
  CHECK(!type_of(AutoKind::tau2, 1).has_value());
  CHECK(!type_of(AutoKind::tau2, 5).has_value());
  CHECK(type_of(AutoKind::tau3, 2) == TypeTag::B);
  CHECK(type_of(AutoKind::tau3, 1) == TypeTag::H);
  CHECK(type_of(AutoKind::tau3, 3) == TypeTag::H);
  CHECK(std::string(to_string(TypeTag::H)) == "H");
}

TEST_CASE("Type A condition") {
  CHECK(type_a_condition(ProjPoint(1, 1, 2)));
  CHECK(!type_a_condition(ProjPoint(1, -1, 0)));
  CHECK(!type_a_condition(ProjPoint(1, 1, 1)));
  CHECK(!type_a_condition(ProjPoint(FieldElement(1), dt.eps, FieldElement(1))));
  for (const auto* c : {&curve_generic(), &curve_j0(), &curve_j1728()})
    for (const auto& p : c->torsion(6).points()) CHECK(type_a_condition(p) == !p.has_zero_coordinate());
}

TEST_CASE("generic curve") {
  const auto& r = report_for(curve_generic());
  CHECK(r.counts() == std::map<TypeTag, std::size_t>{{TypeTag::B, 3}});
  std::vector<ProjPoint> reps;
  for (const auto& k : r.classes) {
    CHECK(k.exponent == 1);
    CHECK(k.members == 9);
    reps.push_back(k.representative);
  }
  const auto& e2 = curve_generic().two_torsion_list();
  CHECK(reps == std::vector<ProjPoint>(e2.begin() + 1, e2.end()));
}

TEST_CASE("j = 0 curve") {
  const auto& c = curve_j0();
  const auto& r = report_for(c);
  CHECK(r.counts() == std::map<TypeTag, std::size_t>{{TypeTag::B, 1}, {TypeTag::E, 2}});
  const auto b = of_tag(r, TypeTag::B);
  REQUIRE(b.size() == 1);
  CHECK(b[0]->exponent == 3);
  CHECK(b[0]->members == 27);
  CHECK(b[0]->representative == ProjPoint(FieldElement(1), FieldElement(1), -dt.cbrt2));
  const auto e = of_tag(r, TypeTag::E);
  REQUIRE(e.size() == 2);
  CHECK(e[0]->exponent == 2);
  CHECK(e[1]->exponent == 4);
  for (const auto* k : e) {
    CHECK(k->representative == typeec::hesse::order_nine_base());
    CHECK(k->members == 18);
  }
}

TEST_CASE("j = 1728 curve") {
  const auto& c = curve_j1728();
  const auto& r = report_for(c);
  CHECK(r.counts() == std::map<TypeTag, std::size_t>{{TypeTag::B, 2}, {TypeTag::H, 2}});
  const ProjPoint p1(1, 1, c.lambda());
  const auto b = of_tag(r, TypeTag::B);
  REQUIRE(b.size() == 2);
  CHECK(b[0]->representative == p1);
  CHECK(b[0]->members == 9);
  CHECK(b[1]->members == 18);
  // The other two 2-torsion points share a class, swapped by tau3.
  const PairDescriptor second(c, c.two_torsion_list()[2], 2), third(c, c.two_torsion_list()[3], 2);
  CHECK(pairs_isomorphic(second, third));
  CHECK(c.automorphism(1).apply(c.two_torsion_list()[2]) == c.two_torsion_list()[3]);
  for (const auto* k : of_tag(r, TypeTag::H)) {
    CHECK(k->representative == p1);
    CHECK(k->members == 9);
  }
}

TEST_CASE("every class: twisted potential, relations and Hilbert dimensions agree") {
  for (const auto* c : {&curve_generic(), &curve_j0(), &curve_j1728()}) {
    for (const auto& k : report_for(*c).classes) {
      CAPTURE(k.representative);
      CAPTURE(k.exponent);
      CHECK(k.relations.dimension() == 3);
      CHECK(derivation_quotient_relations(k.potential) == k.relations);
      CHECK(k.potential_is_twist == (k.tag != TypeTag::E));
      // Both constructions agree up to scalar when the twist is available.
      const auto recovered = potential_from_relations(k.relations);
      REQUIRE(recovered.has_value());
      const auto& w = k.potential.coefficients();
      const auto lead = std::find_if(w.begin(), w.end(), [](const auto& x) { return !x.is_zero(); }) - w.begin();
      CHECK((w[lead] / recovered->coefficients()[lead]) * *recovered == k.potential);
      CHECK(typeec::tensor::tsp_witness(k.potential).has_value());
      CHECK(!typeec::tensor::is_superpotential(k.potential));
      CHECK(hilbert_dims(k.relations, 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
    }
    for (const auto& p : report_for(*c).type_a_samples) {
      const auto w = typeec::tensor::sklyanin(p);
      CHECK(type_a_condition(p));
      CHECK(typeec::tensor::is_superpotential(w));
      CHECK(typeec::tensor::tsp_witness(w).has_value());
      CHECK(relations_from_pair(PairDescriptor(*c, p, 0)) == derivation_quotient_relations(w));
    }
  }
}

TEST_CASE("classification report as JSON") {
  const auto j = to_json(report_for(curve_j0()));
  CHECK(j.at("lambda") == "0");
  CHECK(j.at("j_invariant") == "0");
  CHECK(j.at("class_counts").at("E") == 2);
  const auto& types = j.at("types");
  REQUIRE(types.size() == 4);
  CHECK(types[0].at("tag") == "A");
  CHECK(types[0].at("count").is_null());
  CHECK(types[0].at("samples").size() == 3);
  CHECK(types[1].at("tag") == "E");
  CHECK(types[1].at("exponent") == 2);
  CHECK(types[1].at("count") == 18);
  CHECK(types[1].at("representative_point") == nlohmann::json::array({"1", "eta^5", "eta"}));
  CHECK(types[1].at("relations").size() == 3);
  CHECK(types[1].at("potential").is_string());
  CHECK(types[1].at("potential_source") == "relations");
  CHECK(types[2].at("potential_source") == "twist");
  CHECK(to_json(report_for(curve_j0())) == j);
}
