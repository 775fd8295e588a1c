#include "typeec/cli/commands.hpp"

#include <ostream>

#include "typeec/cli/expression.hpp"
#include "typeec/cli/verify.hpp"
#include "typeec/errors.hpp"
#include "typeec/exactfield/format.hpp"
#include "typeec/geomalg/classify.hpp"
#include "typeec/geomalg/hilbert.hpp"
#include "typeec/geomalg/paut.hpp"
#include "typeec/hesse/loci.hpp"

namespace typeec::cli {

namespace {

using exactfield::to_string;
using hesse::CurveSubset;
using hesse::HesseCurve;
using hesse::ProjPoint;
using nlohmann::json;

json point_json(const ProjPoint& p) { return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}); }

json subset_json(const CurveSubset& s) {
  if (s.entire()) return "E";
  json out = json::array();
  for (const auto& p : s.points()) out.push_back(point_json(p));
  return out;
}

std::string subset_text(const CurveSubset& s) {
  if (s.entire()) return "all of E";
  std::string out = std::to_string(s.size()) + " points";
  for (const auto& p : s.points()) out += "\n  " + p.str();
  return out;
}

std::string j_class(const HesseCurve& c) {
  switch (c.auto_kind()) {
    case hesse::AutoKind::tau2: return "j=0";
    case hesse::AutoKind::tau3: return "j=1728";
    case hesse::AutoKind::tau1: break;
  }
  return "generic";
}

json relations_json(const geomalg::RelationSpace& rel) {
  json out = json::array();
  for (const auto& f : rel.basis()) out.push_back(tensor::to_string(f));
  return out;
}

HesseCurve curve_from(const Options& o) { return HesseCurve(parse_scalar(o.lambda)); }

void check_exponent(const HesseCurve& c, int i) {
  if (i < 0 || i >= c.auto_order())
    throw InvalidArgument("--i must lie in [0, " + std::to_string(c.auto_order()) + ") on this curve");
}

int curve_cmd(const Options& o, std::ostream& out) {
  const HesseCurve c = curve_from(o);
  if (o.json) {
    json e2 = json::array();
    for (const auto& p : c.two_torsion_list()) e2.push_back(point_json(p));
    out << json{{"lambda", to_string(c.lambda())},
                {"j_invariant", to_string(c.j_invariant())},
                {"class", j_class(c)},
                {"automorphism", hesse::to_string(c.auto_kind())},
                {"automorphism_order", c.auto_order()},
                {"two_torsion", e2},
                {"tower", exactfield::tower_to_json(c.tower())}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "lambda = " << to_string(c.lambda()) << '\n'
      << "j = " << to_string(c.j_invariant()) << '\n'
      << "class: " << j_class(c) << '\n'
      << "automorphism: " << hesse::to_string(c.auto_kind()) << " of order " << c.auto_order() << '\n'
      << "E[2]:";
  for (const auto& p : c.two_torsion_list()) out << ' ' << p.str();
  out << '\n';
  return kOk;
}

int torsion_cmd(const Options& o, std::ostream& out) {
  const HesseCurve c = curve_from(o);
  const auto& t = c.torsion(o.n);
  if (o.json)
    out << json{{"lambda", to_string(c.lambda())}, {"n", o.n}, {"points", subset_json(t)}}.dump(2) << '\n';
  else
    out << "E[" << o.n << "]: " << subset_text(t) << '\n';
  return kOk;
}

int loci_cmd(const Options& o, std::ostream& out) {
  const HesseCurve c = curve_from(o);
  check_exponent(c, o.i);
  const auto fixed = hesse::fixed_locus(c, o.i);
  const auto lower = hesse::u_lower(c, o.i);
  const auto upper = hesse::u_upper(c, o.i);
  if (o.json) {
    out << json{{"lambda", to_string(c.lambda())},
                {"i", o.i},
                {"fixed", subset_json(fixed)},
                {"lower", subset_json(lower)},
                {"upper", subset_json(upper)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "E_{tau^" << o.i << "}: " << subset_text(fixed) << '\n'
      << "U_{tau^" << o.i << "}: " << subset_text(lower) << '\n'
      << "U^{tau^" << o.i << "}: " << subset_text(upper) << '\n';
  return kOk;
}

geomalg::PairDescriptor pair_from(const Options& o) {
  const HesseCurve c = curve_from(o);
  check_exponent(c, o.i);
  if (o.point.empty()) throw InvalidArgument("--p is required");
  return geomalg::PairDescriptor(c, parse_point(o.point, c.tower()), o.i);
}

int pair_cmd(const Options& o, std::ostream& out) {
  const auto d = pair_from(o);
  const bool regular = geomalg::is_regular_pair(d);
  const auto tag = geomalg::type_of(d.curve().auto_kind(), d.exponent());
  const auto rel = geomalg::relations_from_pair(d);
  const auto dims = geomalg::hilbert_dims(rel, 4);
  if (o.json) {
    out << json{{"lambda", to_string(d.curve().lambda())},
                {"point", point_json(d.point())},
                {"i", d.exponent()},
                {"type", tag ? json(geomalg::to_string(*tag)) : json(nullptr)},
                {"regular", regular},
                {"relations", relations_json(rel)},
                {"hilbert", dims}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "pair: sigma = sigma_p tau^" << d.exponent() << " with p = " << d.point().str() << '\n'
      << "type: " << (tag ? geomalg::to_string(*tag) : "none") << '\n'
      << "regular: " << (regular ? "yes" : "no") << '\n'
      << "relations (" << rel.dimension() << "):\n";
  for (const auto& f : rel.basis()) out << "  " << tensor::to_string(f) << '\n';
  out << "hilbert:";
  for (auto n : dims) out << ' ' << n;
  out << '\n';
  return kOk;
}

int potential_cmd(const Options& o, std::ostream& out) {
  const auto d = pair_from(o);
  const tensor::LinMap t(d.curve().automorphism(d.exponent()).matrix);
  const tensor::Tensor3 w = tensor::ms_twist(tensor::sklyanin(d.point()), t);
  const bool preserved = geomalg::paut_membership(d.point(), t);
  std::optional<tensor::LinMap> q;
  try {
    q = tensor::tsp_witness(w);
  } catch (const DependentDerivatives&) {
  }
  json witness = nullptr;
  if (q) {
    witness = json::array();
    for (int r = 0; r < 3; ++r) {
      json row = json::array();
      for (int c = 0; c < 3; ++c) row.push_back(to_string(q->matrix()(r, c)));
      witness.push_back(row);
    }
  }
  if (o.json) {
    out << json{{"potential", tensor::to_string(w)},
                {"tau_preserves_w_p", preserved},
                {"witness", witness},
                {"superpotential", tensor::is_superpotential(w)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "potential: " << tensor::to_string(w) << '\n'
      << "tau^" << d.exponent() << " preserves w_p: " << (preserved ? "yes" : "no") << '\n'
      << "witness: " << (q ? witness.dump() : "none") << '\n'
      << "superpotential: " << (tensor::is_superpotential(w) ? "yes" : "no") << '\n';
  return kOk;
}

int classify_cmd(const Options& o, std::ostream& out) {
  const auto report = geomalg::classify(curve_from(o));
  if (o.json) {
    out << geomalg::to_json(report).dump(2) << '\n';
    return kOk;
  }
  out << "lambda = " << to_string(report.curve.lambda()) << ", j = " << to_string(report.curve.j_invariant()) << '\n'
      << "A: sigma_p with abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3\n";
  for (const auto& k : report.classes)
    out << geomalg::to_string(k.tag) << ": i=" << k.exponent << " p=" << k.representative.str() << " ("
        << k.members << " points)\n    w = " << tensor::to_string(k.potential) << '\n';
  out << "counts:";
  for (const auto& [tag, n] : report.counts()) out << ' ' << geomalg::to_string(tag) << '=' << n;
  out << '\n';
  return kOk;
}

int verify_cmd(const Options& o, std::ostream& out) {
  const Report r = verify_tables();
  if (o.json)
    out << r.json().dump(2) << '\n';
  else
    out << r.text();
  return r.exit_code(o.strict);
}

}  // namespace

int run(const std::string& subcommand, const Options& options, std::ostream& out, std::ostream& err) {
  try {
    if (subcommand == "curve") return curve_cmd(options, out);
    if (subcommand == "torsion") return torsion_cmd(options, out);
    if (subcommand == "loci") return loci_cmd(options, out);
    if (subcommand == "pair") return pair_cmd(options, out);
    if (subcommand == "potential") return potential_cmd(options, out);
    if (subcommand == "classify") return classify_cmd(options, out);
    if (subcommand == "verify-tables") return verify_cmd(options, out);
    err << "unknown subcommand '" << subcommand << "'\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace typeec::cli
