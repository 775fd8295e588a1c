#include "typeec/cli/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "typeec/cli/expression.hpp"
#include "typeec/cli/tables.hpp"
#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"
#include "typeec/exactfield/format.hpp"
#include "typeec/geomalg/classify.hpp"
#include "typeec/geomalg/hilbert.hpp"
#include "typeec/geomalg/paut.hpp"
#include "typeec/hesse/loci.hpp"

namespace typeec::cli {

namespace {

using exactfield::to_string;
using geomalg::PairDescriptor;
using geomalg::TypeTag;
using hesse::CurveSubset;
using hesse::HesseCurve;
using hesse::ProjPoint;
using tensor::LinMap;
using tensor::Tensor3;

struct NamedCurve {
  std::string label;
  HesseCurve curve;
};

std::vector<NamedCurve> reference_curves() {
  const auto& dt = exactfield::default_tower();
  return {{"lambda=5/3", HesseCurve(FieldElement(exactfield::Rational(5, 3)))},
          {"lambda=0", HesseCurve(FieldElement(0))},
          {"lambda=1+sqrt3", HesseCurve(FieldElement(1) + dt.sqrt3)}};
}

// s with a = s * b, if any.
std::optional<FieldElement> ratio(const Tensor3& a, const Tensor3& b) {
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  const auto lead = std::find_if(cb.begin(), cb.end(), [](const auto& x) { return !x.is_zero(); });
  if (lead == cb.end()) return std::nullopt;
  const FieldElement s = ca[lead - cb.begin()] / *lead;
  if (s.is_zero() || !(s * b == a)) return std::nullopt;
  return s;
}

// Monomials where the printed tensor differs from the scaled computed one.
std::string differences(const Tensor3& printed, const Tensor3& computed) {
  const auto& cp = printed.coefficients();
  const auto& cc = computed.coefficients();
  FieldElement scale(1);
  for (std::size_t k = 0; k < 27; ++k)
    if (!cp[k].is_zero() && !cc[k].is_zero()) {
      scale = cp[k] / cc[k];
      break;
    }
  std::ostringstream out;
  const char* sep = "";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const FieldElement want = scale * computed(i, j, k);
        if (printed(i, j, k) == want) continue;
        out << sep << tensor::monomial_name(i, j, k) << " printed " << to_string(printed(i, j, k)) << ", computed "
            << to_string(want);
        sep = "; ";
      }
  return out.str();
}

std::string join_exponents(const std::set<int>& s) {
  std::ostringstream out;
  out << '{';
  const char* sep = "";
  for (int e : s) {
    out << sep << e;
    sep = ",";
  }
  out << '}';
  return out.str();
}

void check_group_law(Report& r, const NamedCurve& nc) {
  const auto& c = nc.curve;
  const auto& pts = c.torsion(6).points();
  std::size_t failures = 0, branch_pairs = 0;
  for (const auto& p : pts) {
    if (c.add(p, c.identity()) != p || c.add(c.identity(), p) != p) ++failures;
    if (c.add(p, c.neg(p)) != c.identity()) ++failures;
    for (const auto& q : pts) {
      if (c.add(p, q) != c.add(q, p)) ++failures;
      const auto b1 = c.add_branch(p, q, 1), b2 = c.add_branch(p, q, 2);
      if (b1 && b2) {
        ++branch_pairs;
        if (*b1 != *b2) ++failures;
      }
    }
  }
  std::mt19937 rng(20240);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto &a = pts[pick(rng)], &b = pts[pick(rng)], &d = pts[pick(rng)];
    if (c.add(c.add(a, b), d) != c.add(a, c.add(b, d))) ++failures;
  }
  r.expect("group law " + nc.label, failures == 0,
           std::to_string(pts.size() * pts.size()) + " pairs, 500 triples, " + std::to_string(branch_pairs) +
               " pairs with both formulas, " + std::to_string(failures) + " failures");
}

void check_torsion(Report& r, const NamedCurve& nc) {
  const auto& c = nc.curve;
  const bool sizes = c.torsion(2).size() == 4 && c.torsion(3).size() == 9 && c.torsion(6).size() == 36;
  r.expect("torsion sizes " + nc.label, sizes,
           "|E[2]|=" + std::to_string(c.torsion(2).size()) + " |E[3]|=" + std::to_string(c.torsion(3).size()) +
               " |E[6]|=" + std::to_string(c.torsion(6).size()));
  if (c.auto_kind() == hesse::AutoKind::tau2) {
    std::vector<ProjPoint> listed{c.identity()};
    for (const auto& s : j0_two_torsion_listing()) listed.emplace_back(1, 1, parse_scalar(s));
    r.expect("E[2] listing " + nc.label, CurveSubset::of(listed) == c.torsion(2));
  }
}

void check_loci(Report& r, const NamedCurve& nc) {
  const auto& c = nc.curve;
  std::vector<ProjPoint> candidates = c.torsion(6).points();
  if (c.auto_kind() == hesse::AutoKind::tau2) {
    const auto nine = hesse::order_nine_points(c).points();
    candidates.insert(candidates.end(), nine.begin(), nine.end());
  }
  const CurveSubset pool = CurveSubset::of(candidates);
  for (int i = 0; i < c.auto_order(); ++i) {
    const auto fixed = hesse::fixed_locus(c, i);
    const bool fixed_ok = fixed.entire() ? hesse::fixed_points_among(c, i, c.torsion(6)) == c.torsion(6)
                                         : fixed == hesse::fixed_points_among(c, i, c.torsion(6));
    const bool upper_ok = hesse::u_upper(c, i) == hesse::u_upper_closed_form(c, i);
    bool lower_ok = true;
    const auto lower = hesse::u_lower(c, i);
    if (!lower.entire()) {
      lower_ok = lower == hesse::u_lower_among(c, i, pool);
      for (const auto& p : lower.points()) lower_ok = lower_ok && c.contains(p);
    }
    r.expect("loci " + nc.label + " i=" + std::to_string(i), fixed_ok && upper_ok && lower_ok,
             "fixed locus, upper and lower loci against direct evaluation");
  }
  if (c.auto_kind() == hesse::AutoKind::tau2) {
    std::vector<ProjPoint> expected = c.torsion(3).points();
    for (const auto& s : order_nine_listing()) expected.push_back(parse_point(s));
    const auto lower = hesse::u_lower(c, 2);
    r.expect("U_{tau2^2} listing " + nc.label, lower == CurveSubset::of(expected) && lower.size() == 27,
             std::to_string(lower.size()) + " points");
  }
}

void check_classification(Report& r, const NamedCurve& nc, const geomalg::Classification& report) {
  const auto& c = nc.curve;
  std::map<TypeTag, std::size_t> expected;
  switch (c.auto_kind()) {
    case hesse::AutoKind::tau1: expected = {{TypeTag::B, 3}}; break;
    case hesse::AutoKind::tau2: expected = {{TypeTag::B, 1}, {TypeTag::E, 2}}; break;
    case hesse::AutoKind::tau3: expected = {{TypeTag::B, 2}, {TypeTag::H, 2}}; break;
  }
  std::ostringstream got;
  for (const auto& [tag, n] : report.counts()) got << geomalg::to_string(tag) << '=' << n << ' ';
  r.expect("classification " + nc.label, report.counts() == expected, got.str());

  for (const auto& k : report.classes) {
    const std::string id = nc.label + " " + geomalg::to_string(k.tag) + " i=" + std::to_string(k.exponent) + " at " +
                           k.representative.str();
    r.expect("coherence " + id,
             k.relations.dimension() == 3 && geomalg::derivation_quotient_relations(k.potential) == k.relations);
    r.expect("witness " + id, tensor::tsp_witness(k.potential).has_value() &&
                                  !tensor::is_superpotential(k.potential));
    const std::vector<std::size_t> want{1, 3, 6, 10, 15};
    const PairDescriptor mirror(c, k.representative, c.auto_order() - k.exponent);
    r.expect("hilbert " + id,
             geomalg::hilbert_dims(k.relations, 4) == want &&
                 geomalg::hilbert_dims(geomalg::relations_from_pair(mirror), 4) == want,
             "n=0..4 at exponents " + std::to_string(k.exponent) + " and " + std::to_string(mirror.exponent()));
  }
  for (const auto& p : report.type_a_samples) {
    const Tensor3 w = tensor::sklyanin(p);
    r.expect("Type A " + nc.label + " at " + p.str(),
             geomalg::type_a_condition(p) && tensor::is_superpotential(w) &&
                 geomalg::relations_from_pair(PairDescriptor(c, p, 0)) == geomalg::derivation_quotient_relations(w));
  }
}

void check_aut_scalars(Report& r, const NamedCurve& nc) {
  const auto& c = nc.curve;
  const LinMap s1(hesse::translation_p1()), s2(hesse::translation_p2());
  std::size_t sampled = 0;
  bool ok = true;
  for (const auto& p : c.torsion(6).points()) {
    if (p.has_zero_coordinate()) continue;
    ++sampled;
    ok = ok && tensor::aut_scalar(tensor::sklyanin(p), s1) == FieldElement(1) &&
         tensor::aut_scalar(tensor::sklyanin(p), s2) == FieldElement(1);
  }
  r.expect("T[3] preserves w_p " + nc.label, ok, std::to_string(sampled) + " base points");
  if (c.auto_kind() == hesse::AutoKind::tau3) {
    const auto s = tensor::aut_scalar(tensor::sklyanin(ProjPoint(1, 1, c.lambda())), LinMap(c.automorphism(1).matrix));
    r.expect("tau3 scalar at (1:1:lambda)", s == FieldElement(3) * exactfield::default_tower().sqrt3,
             s ? to_string(*s) : "not an eigenvector");
  }
  if (c.auto_kind() == hesse::AutoKind::tau2) {
    bool rejected = true;
    for (const auto& p : c.torsion(6).points())
      if (!p.has_zero_coordinate())
        for (int i : {1, 2}) rejected = rejected && !geomalg::paut_membership(p, LinMap(c.automorphism(i).matrix));
    r.expect("tau2, tau2^2 not in PAut(w_p) " + nc.label, rejected);
  }
}

void check_obstruction(Report& r, const NamedCurve& nc) {
  const auto result = geomalg::verify_type_e_not_twist(nc.curve);
  std::set<int> exponents;
  for (const auto& s : result.samples) exponents.insert(s.exponents.begin(), s.exponents.end());
  r.expect("Type E is not a twist", result.confirmed,
           std::to_string(result.samples.size()) + " base points, twist exponents " + join_exponents(exponents) +
               " vs Type E exponents {2,4}");
}

// Compares a printed row with a computed potential up to a global scalar.
void compare_row(Report& r, const std::string& name, const ReferencePotential& row, const Tensor3& computed,
                 const Bindings& bindings, const exactfield::Tower& tower, Status on_mismatch) {
  Tensor3 printed;
  try {
    printed = parse_potential(row.text, tower, bindings);
  } catch (const ParseError& e) {
    r.add(name, on_mismatch, std::string("printed potential does not parse: ") + e.what());
    return;
  }
  if (ratio(printed, computed))
    r.add(name, Status::pass, "equal up to scalar");
  else
    r.add(name, on_mismatch, differences(printed, computed));
}

void check_reference_tables(Report& r, const std::vector<NamedCurve>& curves,
                            const std::vector<geomalg::Classification>& reports) {
  // Type B rows, at every Type B representative.
  for (std::size_t n = 0; n < curves.size(); ++n) {
    const auto& c = curves[n].curve;
    for (const auto& k : reports[n].classes) {
      if (k.tag != TypeTag::B) continue;
      const Bindings b{{"c", k.representative[2]}, {"lambda", c.lambda()}};
      const std::string id = curves[n].label + " c=" + to_string(k.representative[2]);
      compare_row(r, "Type B printed " + id, type_b_printed(), k.potential, b, c.tower(), Status::erratum);
      compare_row(r, "Type B derived " + id, type_b_derived(), k.potential, b, c.tower(), Status::fail);
      const bool derived_condition = parse_scalar(type_b_derived().condition, c.tower(), b).is_zero();
      r.expect("Type B derived condition " + id, derived_condition);
      const FieldElement printed = parse_scalar(type_b_printed().condition, c.tower(), b);
      if (printed.is_zero())
        r.add("Type B printed condition " + id, Status::pass);
      else
        r.add("Type B printed condition " + id, Status::erratum,
              "c^3-lambda c+2 = " + to_string(printed) + " at a point of order 2");
    }
  }

  const HesseCurve& j0 = curves[1].curve;
  const ProjPoint q = hesse::order_nine_base();
  const geomalg::RelationSpace rel_q2 = geomalg::relations_from_pair(PairDescriptor(j0, q, 2));
  std::vector<tensor::Tensor2> displayed;
  for (const auto& s : type_e_displayed_derivatives()) {
    const Tensor3 t = parse_potential("x(" + s + ")");
    displayed.push_back(tensor::left_deriv(t, 0));
  }
  r.expect("Type E i=2 relations equal the displayed derivatives", geomalg::RelationSpace(displayed) == rel_q2);
  compare_row(r, "Type E i=2 printed potential", type_e_first(), *geomalg::potential_from_relations(rel_q2), {},
              nullptr, Status::fail);

  const ProjPoint q_prime = parse_point(type_e_second_point());
  r.expect("Type E i=4 printed point is tau2(q)", j0.automorphism(1).apply(q) == q_prime);
  r.expect("Type E i=4 pairs at q and tau2(q) are isomorphic",
           geomalg::pairs_isomorphic(PairDescriptor(j0, q, 4), PairDescriptor(j0, q_prime, 4)));
  const auto rel_q4 = geomalg::relations_from_pair(PairDescriptor(j0, q_prime, 4));
  compare_row(r, "Type E i=4 printed potential", type_e_second(), *geomalg::potential_from_relations(rel_q4), {},
              nullptr, Status::fail);

  // Witness scalars printed for both Type E rows.
  exactfield::ExactMatrix printed_q(3, 3);
  for (int i = 0; i < 3; ++i) printed_q(i, i) = parse_scalar(type_e_printed_scalars()[i]);
  for (const auto* row : {&type_e_second(), &type_e_first()}) {
    const auto w = tsp_witness(parse_potential(row->text));
    if (!w) {
      r.add("Type E witness " + row->name, Status::fail, "no witness");
      continue;
    }
    std::string got = "computed diag(" + to_string(w->matrix()(0, 0)) + ", " + to_string(w->matrix()(1, 1)) + ", " +
                      to_string(w->matrix()(2, 2)) + ")";
    if (w->matrix() == printed_q)
      r.add("Type E witness " + row->name, Status::pass, got);
    else
      r.add("Type E witness " + row->name, Status::erratum, got + " differs from the printed diag(eta^8, eta^5, eta^2)");
  }

  const HesseCurve& h = curves[2].curve;
  const Bindings hb{{"lambda", h.lambda()}};
  const ProjPoint p1(1, 1, h.lambda());
  for (int i : {1, 3}) {
    const Tensor3 computed = tensor::ms_twist(tensor::sklyanin(p1), LinMap(h.automorphism(i).matrix));
    const auto& printed = i == 1 ? type_h_first() : type_h_third();
    const auto& derived = i == 1 ? type_h_first_derived() : type_h_third_derived();
    compare_row(r, "Type H printed " + printed.name, printed, computed, hb, h.tower(), Status::erratum);
    compare_row(r, "Type H derived " + printed.name, derived, computed, hb, h.tower(), Status::fail);
    r.expect("Type H witness " + printed.name, tensor::tsp_witness(parse_potential(derived.text, h.tower(), hb)).has_value());
  }
}

}  // namespace

Report verify_tables() {
  Report r;
  const auto curves = reference_curves();
  std::vector<geomalg::Classification> reports;
  for (const auto& nc : curves) reports.push_back(geomalg::classify(nc.curve));
  for (const auto& nc : curves) check_group_law(r, nc);
  for (const auto& nc : curves) check_torsion(r, nc);
  for (const auto& nc : curves) check_loci(r, nc);
  for (std::size_t n = 0; n < curves.size(); ++n) check_classification(r, curves[n], reports[n]);
  for (const auto& nc : curves) check_aut_scalars(r, nc);
  check_obstruction(r, curves[1]);
  check_reference_tables(r, curves, reports);
  return r;
}

}  // namespace typeec::cli
