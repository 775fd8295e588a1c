#pragma once

#include "typeec/hesse/curve.hpp"

namespace typeec::hesse {

/// Points fixed by tau^i, in closed form: all of E for i = 0, E[2] for the
/// half-order power, and the small cyclic groups otherwise.
CurveSubset fixed_locus(const HesseCurve& c, int i);

/// Members of `candidates` fixed by tau^i, by direct evaluation.
CurveSubset fixed_points_among(const HesseCurve& c, int i, const CurveSubset& candidates);

/// {p : p - tau^i(p) in E[3]} in closed form. For lambda = 0 and i = 2, 4 this
/// is E[3] together with 18 points of order 9 (see order_nine_points).
CurveSubset u_lower(const HesseCurve& c, int i);

/// Members p of `candidates` with p - tau^i(p) in E[3], by direct evaluation.
CurveSubset u_lower_among(const HesseCurve& c, int i, const CurveSubset& candidates);

/// {r - tau^i(r) : r in E[3]}, computed by running over E[3].
CurveSubset u_upper(const HesseCurve& c, int i);

/// The same set from its closed form: {o_E} for i = 0, <(1:-eps:0)> for
/// lambda = 0 and i = 2, 4, E[3] otherwise.
CurveSubset u_upper_closed_form(const HesseCurve& c, int i);

/// At lambda = 0: {tau^l(q) + r : l in Z_6, r fixed by tau^2} with
/// q = (eta^8:eta^4:1). Throws InvalidArgument on other curves.
CurveSubset order_nine_points(const HesseCurve& c);

/// (eta^8:eta^4:1), the base point of the order-nine family.
ProjPoint order_nine_base();

}  // namespace typeec::hesse
