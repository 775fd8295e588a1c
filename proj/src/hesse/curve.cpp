#include "typeec/hesse/curve.hpp"

#include <algorithm>
#include <tuple>

#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"
#include "typeec/exactfield/roots.hpp"

namespace typeec::hesse {

using exactfield::default_tower;

namespace {

// (nonzero rational leaves, total generator exponent): small means simple.
std::pair<std::size_t, std::size_t> complexity(const FieldElement& x) {
  if (x.is_rational()) return {x.is_zero() ? 0 : 1, 0};
  std::size_t leaves = 0, exps = 0;
  auto coeffs = x.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto [l, e] = complexity(coeffs[i]);
    leaves += l;
    exps += e + (l ? i : 0);
  }
  return {leaves, exps};
}

Tower base_tower_for(const FieldElement& lambda) {
  const Tower& top = default_tower().top();
  if (belongs_to(lambda, top)) return top;
  Tower own = lambda.level_handle();
  if (own->contains(top.get())) return own;
  throw InvalidArgument("lambda must lie in the default tower or an extension of it");
}

ExactMatrix generator_matrix(AutoKind kind) {
  const auto& dt = default_tower();
  const FieldElement zero(0), one(1);
  switch (kind) {
    case AutoKind::tau1:
      return ExactMatrix::from_rows({{zero, one, zero}, {one, zero, zero}, {zero, zero, one}}, 3);
    case AutoKind::tau2:
      return ExactMatrix::from_rows({{zero, one, zero}, {one, zero, zero}, {zero, zero, dt.eps}}, 3);
    case AutoKind::tau3: {
      const FieldElement e2 = dt.eps * dt.eps;
      return ExactMatrix::from_rows({{e2, dt.eps, one}, {dt.eps, e2, one}, {one, one, one}}, 3);
    }
  }
  throw InvalidArgument("unknown automorphism kind");
}

int order_of(AutoKind kind) {
  switch (kind) {
    case AutoKind::tau1: return 2;
    case AutoKind::tau2: return 6;
    case AutoKind::tau3: return 4;
  }
  return 1;
}

}  // namespace

// ---------------------------------------------------------------------------

CurveSubset CurveSubset::of(std::vector<ProjPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return CurveSubset(false, std::move(points));
}

bool CurveSubset::contains(const ProjPoint& p) const {
  return entire_ || std::binary_search(points_.begin(), points_.end(), p);
}

const char* to_string(AutoKind kind) {
  switch (kind) {
    case AutoKind::tau1: return "tau1";
    case AutoKind::tau2: return "tau2";
    case AutoKind::tau3: return "tau3";
  }
  return "?";
}

ProjPoint CurveAuto::apply(const ProjPoint& p) const {
  const auto v = matrix.apply(p.coords());
  return ProjPoint(v[0], v[1], v[2]);
}

ExactMatrix translation_p1() {
  const auto& dt = default_tower();
  const FieldElement zero(0);
  return ExactMatrix::from_rows({{dt.eps * dt.eps, zero, zero}, {zero, FieldElement(1), zero}, {zero, zero, dt.eps}}, 3);
}

ExactMatrix translation_p2() {
  const FieldElement zero(0), one(1);
  return ExactMatrix::from_rows({{zero, one, zero}, {zero, zero, one}, {one, zero, zero}}, 3);
}

// ---------------------------------------------------------------------------

HesseCurve::HesseCurve(FieldElement lambda) {
  auto data = std::make_shared<Data>();
  data->lambda = lambda;
  if (lambda.pow(3).is_one()) throw InvalidArgument("lambda^3 = 1 gives a singular cubic");
  Tower base = base_tower_for(lambda);

  const auto& dt = default_tower();
  const FieldElement j = j_invariant_of(lambda);
  if (lambda.is_zero()) {
    data->kind = AutoKind::tau2;
  } else if (lambda == FieldElement(1) + dt.sqrt3) {
    data->kind = AutoKind::tau3;
  } else if (j.is_zero() || j == FieldElement(1728)) {
    throw InvalidArgument("j(E) = " + std::string(j.is_zero() ? "0" : "1728") +
                          " is only supported at lambda = " + (j.is_zero() ? "0" : "1+sqrt3"));
  } else {
    data->kind = AutoKind::tau1;
  }

  // E[2] \ {o_E} = {(1:1:c) : c^3 - 3 lambda c + 2 = 0}.
  const auto split = exactfield::split({FieldElement(2), FieldElement(-3) * lambda, FieldElement(0), FieldElement(1)},
                                       base, "rho");
  data->tower = split.tower;
  std::vector<FieldElement> roots = split.roots;
  std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) {
    return std::make_tuple(complexity(a), a) < std::make_tuple(complexity(b), b);
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() != 3) throw InvalidArgument("the 2-torsion cubic has a repeated root");
  data->two_torsion_list.push_back(ProjPoint(1, -1, 0));
  for (const auto& c : roots) data->two_torsion_list.push_back(ProjPoint(1, 1, c));
  data->e2 = CurveSubset::of(data->two_torsion_list);

  std::vector<ProjPoint> three;
  FieldElement unit(1);
  for (int k = 0; k < 3; ++k, unit *= dt.eps) {
    three.emplace_back(1, -unit, 0);
    three.emplace_back(0, 1, -unit);
    three.emplace_back(1, 0, -unit);
  }
  data->e3 = CurveSubset::of(three);

  data_ = data;
  std::vector<ProjPoint> six;
  for (const auto& p : data->e2.points())
    for (const auto& r : data->e3.points()) six.push_back(add(p, r));
  data->e6 = CurveSubset::of(six);
  if (data->e6.size() != 36) throw InvalidArgument("E[6] does not have 36 points");
}

FieldElement HesseCurve::j_invariant_of(const FieldElement& lambda) {
  const FieldElement l3 = lambda.pow(3);
  return FieldElement(27) * l3 * (l3 + FieldElement(8)).pow(3) / (l3 - FieldElement(1)).pow(3);
}

FieldElement HesseCurve::j_invariant() const { return j_invariant_of(lambda()); }

bool HesseCurve::contains(const ProjPoint& p) const {
  const auto& [a, b, c] = p.coords();
  return (a.pow(3) + b.pow(3) + c.pow(3) - FieldElement(3) * lambda() * a * b * c).is_zero();
}

ProjPoint HesseCurve::identity() const { return ProjPoint(1, -1, 0); }

std::optional<ProjPoint> HesseCurve::add_branch(const ProjPoint& p, const ProjPoint& q, int branch) const {
  const auto& [a, b, c] = p.coords();
  const auto& [al, be, ga] = q.coords();
  FieldElement x, y, z;
  if (branch == 1) {
    x = a * c * be * be - b * b * al * ga;
    y = b * c * al * al - a * a * be * ga;
    z = a * b * ga * ga - c * c * al * be;
  } else if (branch == 2) {
    x = a * b * al * al - c * c * be * ga;
    y = a * c * ga * ga - b * b * al * be;
    z = b * c * be * be - a * a * al * ga;
  } else {
    throw InvalidArgument("addition branch must be 1 or 2");
  }
  if (x.is_zero() && y.is_zero() && z.is_zero()) return std::nullopt;
  return ProjPoint(x, y, z);
}

ProjPoint HesseCurve::add(const ProjPoint& p, const ProjPoint& q) const {
  if (auto r = add_branch(p, q, 1)) return *r;
  if (auto r = add_branch(p, q, 2)) return *r;
  throw DegenerateAddition();
}

ProjPoint HesseCurve::neg(const ProjPoint& p) const { return ProjPoint(p[1], p[0], p[2]); }

ProjPoint HesseCurve::scalar_mul(long n, const ProjPoint& p) const {
  if (n < 0) return scalar_mul(-n, neg(p));
  ProjPoint result = identity();
  ProjPoint base = p;
  while (n > 0) {
    if (n & 1) result = add(result, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return result;
}

const CurveSubset& HesseCurve::torsion(int n) const {
  switch (n) {
    case 2: return data_->e2;
    case 3: return data_->e3;
    case 6: return data_->e6;
  }
  throw InvalidArgument("torsion is available for n = 2, 3, 6");
}

int HesseCurve::auto_order() const { return order_of(data_->kind); }

CurveAuto HesseCurve::automorphism(int i) const {
  const int order = auto_order();
  const int e = ((i % order) + order) % order;
  ExactMatrix m = ExactMatrix::identity(3);
  const ExactMatrix g = generator_matrix(data_->kind);
  for (int k = 0; k < e; ++k) m = m * g;
  return CurveAuto{data_->kind, e, order, std::move(m)};
}

}  // namespace typeec::hesse
