#pragma once

#include <set>
#include <vector>

#include "typeec/geomalg/pair.hpp"

namespace typeec::geomalg {

/// t preserves the Sklyanin potential w_p up to a scalar.
bool paut_membership(const ProjPoint& p, const tensor::LinMap& t);

/// sigma_p1^a sigma_p2^b tau^l, with its action on the curve read off as the
/// translation by image(o_E) composed with tau^l.
struct PAutElement {
  int a;
  int b;
  int l;
  tensor::LinMap map;
  ProjPoint translation;
};

/// Members of the group generated by the 3-torsion translations and tau that
/// preserve w_p projectively.
std::vector<PAutElement> paut_group(const HesseCurve& c, const ProjPoint& p);

struct TwistSample {
  ProjPoint base;
  std::set<int> exponents;  ///< tau-exponents occurring in PAut(w_base)
  bool disjoint;            ///< no induced pair is isomorphic to a Type E pair
};

struct TwistObstruction {
  std::vector<TwistSample> samples;
  bool confirmed;
};

/// On the lambda = 0 curve, no twist of a Sklyanin algebra by an element of
/// PAut(w_p) lands in the Type E classes. Samples every point of
/// U_{tau^3} minus E[3] and the order-nine base point. Throws InvalidArgument
/// on other curves.
TwistObstruction verify_type_e_not_twist(const HesseCurve& c);

}  // namespace typeec::geomalg
