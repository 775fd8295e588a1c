#include "typeec/geomalg/paut.hpp"

#include "typeec/errors.hpp"
#include "typeec/hesse/loci.hpp"

namespace typeec::geomalg {

using exactfield::ExactMatrix;

bool paut_membership(const ProjPoint& p, const tensor::LinMap& t) {
  return tensor::aut_scalar(tensor::sklyanin(p), t).has_value();
}

std::vector<PAutElement> paut_group(const HesseCurve& c, const ProjPoint& p) {
  const tensor::Tensor3 w = tensor::sklyanin(p);
  const ExactMatrix s1 = hesse::translation_p1();
  const ExactMatrix s2 = hesse::translation_p2();
  std::vector<PAutElement> out;
  ExactMatrix s1_pow = ExactMatrix::identity(3);
  for (int a = 0; a < 3; ++a, s1_pow = s1_pow * s1) {
    ExactMatrix s2_pow = ExactMatrix::identity(3);
    for (int b = 0; b < 3; ++b, s2_pow = s2_pow * s2) {
      for (int l = 0; l < c.auto_order(); ++l) {
        const ExactMatrix m = s1_pow * s2_pow * c.automorphism(l).matrix;
        tensor::LinMap t(m);
        if (!tensor::aut_scalar(w, t)) continue;
        const auto image = m.apply(c.identity().coords());
        out.push_back({a, b, l, std::move(t), ProjPoint(image[0], image[1], image[2])});
      }
    }
  }
  return out;
}

TwistObstruction verify_type_e_not_twist(const HesseCurve& c) {
  if (c.auto_kind() != hesse::AutoKind::tau2) throw InvalidArgument("the Type E obstruction lives on the lambda = 0 curve");
  const ProjPoint q = hesse::order_nine_base();
  const PairDescriptor type_e[] = {PairDescriptor(c, q, 2), PairDescriptor(c, q, 4)};

  std::vector<ProjPoint> bases;
  const auto candidates = hesse::u_lower(c, 3);
  for (const auto& p : candidates.points())
    if (!p.has_zero_coordinate()) bases.push_back(p);
  bases.push_back(q);

  TwistObstruction result{{}, true};
  for (const auto& p : bases) {
    TwistSample sample{p, {}, true};
    for (const auto& g : paut_group(c, p)) {
      sample.exponents.insert(g.l);
      const PairDescriptor induced(c, c.add(p, g.translation), g.l);
      for (const auto& e : type_e)
        if (pairs_isomorphic(induced, e)) sample.disjoint = false;
    }
    for (int l : sample.exponents)
      if (l != 0 && l != 3) sample.disjoint = false;
    result.confirmed = result.confirmed && sample.disjoint;
    result.samples.push_back(std::move(sample));
  }
  return result;
}

}  // namespace typeec::geomalg
