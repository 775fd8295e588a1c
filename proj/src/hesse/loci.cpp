#include "typeec/hesse/loci.hpp"

#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"

namespace typeec::hesse {

using exactfield::default_tower;

namespace {

int reduce_exponent(const HesseCurve& c, int i) {
  const int n = c.auto_order();
  return ((i % n) + n) % n;
}

CurveSubset cyclic_three_on_line_at_infinity() {
  const auto& dt = default_tower();
  return CurveSubset::of({ProjPoint(1, -1, 0), ProjPoint(1, -dt.eps, 0), ProjPoint(1, -dt.eps * dt.eps, 0)});
}

CurveSubset plus_three_torsion(const HesseCurve& c, const CurveSubset& s) {
  std::vector<ProjPoint> out;
  for (const auto& p : s.points())
    for (const auto& r : c.torsion(3).points()) out.push_back(c.add(p, r));
  return CurveSubset::of(std::move(out));
}

}  // namespace

CurveSubset fixed_locus(const HesseCurve& c, int i) {
  const int e = reduce_exponent(c, i);
  if (e == 0) return CurveSubset::entire_curve();
  if (2 * e == c.auto_order()) return c.torsion(2);
  switch (c.auto_kind()) {
    case AutoKind::tau1:
      break;
    case AutoKind::tau2:
      if (e == 2 || e == 4) return cyclic_three_on_line_at_infinity();
      return CurveSubset::of({c.identity()});
    case AutoKind::tau3:
      return CurveSubset::of({c.identity(), ProjPoint(1, 1, c.lambda())});
  }
  throw InvalidArgument("exponent out of range");
}

CurveSubset fixed_points_among(const HesseCurve& c, int i, const CurveSubset& candidates) {
  const CurveAuto t = c.automorphism(i);
  std::vector<ProjPoint> out;
  for (const auto& p : candidates.points())
    if (t.apply(p) == p) out.push_back(p);
  return CurveSubset::of(std::move(out));
}

CurveSubset u_lower(const HesseCurve& c, int i) {
  const int e = reduce_exponent(c, i);
  if (e == 0) return CurveSubset::entire_curve();
  if (2 * e == c.auto_order()) return c.torsion(6);
  switch (c.auto_kind()) {
    case AutoKind::tau1:
      break;
    case AutoKind::tau2: {
      if (e == 1 || e == 5) return c.torsion(3);
      std::vector<ProjPoint> pts = c.torsion(3).points();
      const auto extra = order_nine_points(c).points();
      pts.insert(pts.end(), extra.begin(), extra.end());
      return CurveSubset::of(std::move(pts));
    }
    case AutoKind::tau3:
      return plus_three_torsion(c, fixed_locus(c, e));
  }
  throw InvalidArgument("exponent out of range");
}

CurveSubset u_lower_among(const HesseCurve& c, int i, const CurveSubset& candidates) {
  const CurveAuto t = c.automorphism(i);
  const auto& e3 = c.torsion(3);
  std::vector<ProjPoint> out;
  for (const auto& p : candidates.points())
    if (e3.contains(c.sub(p, t.apply(p)))) out.push_back(p);
  return CurveSubset::of(std::move(out));
}

CurveSubset u_upper(const HesseCurve& c, int i) {
  const CurveAuto t = c.automorphism(i);
  std::vector<ProjPoint> out;
  for (const auto& r : c.torsion(3).points()) out.push_back(c.sub(r, t.apply(r)));
  return CurveSubset::of(std::move(out));
}

CurveSubset u_upper_closed_form(const HesseCurve& c, int i) {
  const int e = reduce_exponent(c, i);
  if (e == 0) return CurveSubset::of({c.identity()});
  if (c.auto_kind() == AutoKind::tau2 && (e == 2 || e == 4)) return cyclic_three_on_line_at_infinity();
  return c.torsion(3);
}

ProjPoint order_nine_base() {
  const auto& dt = default_tower();
  return ProjPoint(dt.eta.pow(8), dt.eta.pow(4), 1);
}

CurveSubset order_nine_points(const HesseCurve& c) {
  if (c.auto_kind() != AutoKind::tau2) throw InvalidArgument("the order-nine family lives on the lambda = 0 curve");
  const ProjPoint q = order_nine_base();
  const CurveSubset fixed = fixed_locus(c, 2);
  std::vector<ProjPoint> out;
  for (int l = 0; l < 6; ++l) {
    const ProjPoint image = c.automorphism(l).apply(q);
    for (const auto& r : fixed.points()) out.push_back(c.add(image, r));
  }
  return CurveSubset::of(std::move(out));
}

}  // namespace typeec::hesse
