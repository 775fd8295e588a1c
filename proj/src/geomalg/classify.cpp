#include "typeec/geomalg/classify.hpp"

#include <algorithm>

#include "typeec/errors.hpp"
#include "typeec/exactfield/format.hpp"
#include "typeec/geomalg/paut.hpp"
#include "typeec/hesse/loci.hpp"

namespace typeec::geomalg {

namespace {

using nlohmann::json;

json point_json(const ProjPoint& p) {
  return json::array({exactfield::to_string(p[0]), exactfield::to_string(p[1]), exactfield::to_string(p[2])});
}

std::size_t representative_rank(const HesseCurve& c, const ProjPoint& p) {
  const auto& e2 = c.two_torsion_list();
  if (auto it = std::find(e2.begin(), e2.end(), p); it != e2.end()) return it - e2.begin();
  if (c.auto_kind() == hesse::AutoKind::tau2 && p == hesse::order_nine_base()) return e2.size();
  return e2.size() + 1;
}

}  // namespace

const char* to_string(TypeTag tag) {
  switch (tag) {
    case TypeTag::A: return "A";
    case TypeTag::B: return "B";
    case TypeTag::E: return "E";
    case TypeTag::H: return "H";
  }
  return "?";
}

std::optional<TypeTag> type_of(hesse::AutoKind kind, int i) {
  if (i == 0) return TypeTag::A;
  switch (kind) {
    case hesse::AutoKind::tau1:
      if (i == 1) return TypeTag::B;
      break;
    case hesse::AutoKind::tau2:
      if (i == 3) return TypeTag::B;
      if (i == 2 || i == 4) return TypeTag::E;
      break;
    case hesse::AutoKind::tau3:
      if (i == 2) return TypeTag::B;
      if (i == 1 || i == 3) return TypeTag::H;
      break;
  }
  return std::nullopt;
}

bool type_a_condition(const ProjPoint& p) {
  const auto& [a, b, c] = p.coords();
  const FieldElement abc = a * b * c;
  if (abc.is_zero()) return false;
  return (a.pow(3) + b.pow(3) + c.pow(3)).pow(3) != (FieldElement(3) * abc).pow(3);
}

std::map<TypeTag, std::size_t> Classification::counts() const {
  std::map<TypeTag, std::size_t> out;
  for (const auto& k : classes) ++out[k.tag];
  return out;
}

Classification classify(const HesseCurve& c) {
  Classification report{c, {}, {}};
  for (const auto& p : c.two_torsion_list())
    if (p != c.identity()) report.type_a_samples.push_back(p);

  for (int i = 1; i < c.auto_order(); ++i) {
    const auto tag = type_of(c.auto_kind(), i);
    if (!tag) continue;
    std::vector<ProjPoint> pending;
    const auto candidates = hesse::u_lower(c, i);
    for (const auto& p : candidates.points())
      if (is_regular_pair(PairDescriptor(c, p, i))) pending.push_back(p);

    while (!pending.empty()) {
      const auto orbit = isomorphism_orbit(PairDescriptor(c, pending.front(), i));
      std::vector<ProjPoint> members, rest;
      for (const auto& p : pending) (orbit.contains(p) ? members : rest).push_back(p);
      pending = std::move(rest);
      const ProjPoint rep = *std::min_element(members.begin(), members.end(), [&](const auto& x, const auto& y) {
        const auto rx = representative_rank(c, x), ry = representative_rank(c, y);
        return rx != ry ? rx < ry : x < y;
      });
      const tensor::LinMap t(c.automorphism(i).matrix);
      RelationSpace rel = relations_from_pair(PairDescriptor(c, rep, i));
      const bool twist = paut_membership(rep, t);
      Tensor3 w = twist ? tensor::ms_twist(tensor::sklyanin(rep), t) : potential_from_relations(rel).value();
      report.classes.push_back({*tag, i, rep, members.size(), std::move(rel), std::move(w), twist});
    }
  }
  return report;
}

nlohmann::json to_json(const Classification& report) {
  json types = json::array();
  json a_samples = json::array();
  for (const auto& p : report.type_a_samples) a_samples.push_back(point_json(p));
  types.push_back({{"tag", "A"},
                   {"exponent", 0},
                   {"representative_point", nullptr},
                   {"count", nullptr},
                   {"constraint", "abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3"},
                   {"samples", a_samples}});
  for (const auto& k : report.classes) {
    json rel = json::array();
    for (const auto& f : k.relations.basis()) rel.push_back(tensor::to_string(f));
    types.push_back({{"tag", to_string(k.tag)},
                     {"exponent", k.exponent},
                     {"representative_point", point_json(k.representative)},
                     {"count", k.members},
                     {"relations", rel},
                     {"potential", tensor::to_string(k.potential)},
                     {"potential_source", k.potential_is_twist ? "twist" : "relations"}});
  }
  json counts = json::object();
  for (const auto& [tag, n] : report.counts()) counts[to_string(tag)] = n;
  return {{"lambda", exactfield::to_string(report.curve.lambda())},
          {"j_invariant", exactfield::to_string(report.curve.j_invariant())},
          {"automorphism", hesse::to_string(report.curve.auto_kind())},
          {"tower", exactfield::tower_to_json(report.curve.tower())},
          {"types", types},
          {"class_counts", counts}};
}

}  // namespace typeec::geomalg
