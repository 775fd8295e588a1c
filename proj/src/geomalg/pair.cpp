#include "typeec/geomalg/pair.hpp"

#include "typeec/errors.hpp"
#include "typeec/hesse/loci.hpp"

namespace typeec::geomalg {

HomPoly::HomPoly(int degree) : degree_(degree), coeffs_((degree + 1) * (degree + 2) / 2) {
  if (degree < 0) throw InvalidArgument("negative degree");
}

// Exponents run a = d..0, then b = d-a..0.
std::size_t HomPoly::index(int degree, int a, int b) {
  const int before = (degree - a) * (degree - a + 1) / 2;
  return static_cast<std::size_t>(before + (degree - a - b));
}

HomPoly HomPoly::variable(int i) {
  HomPoly p(1);
  p.at(i == 0, i == 1, i == 2) = FieldElement(1);
  return p;
}

HomPoly HomPoly::hesse_cubic(const FieldElement& lambda) {
  HomPoly g(3);
  g.at(3, 0, 0) = FieldElement(1);
  g.at(0, 3, 0) = FieldElement(1);
  g.at(0, 0, 3) = FieldElement(1);
  g.at(1, 1, 1) = FieldElement(-3) * lambda;
  return g;
}

FieldElement& HomPoly::at(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != degree_) throw InvalidArgument("exponent outside degree");
  return coeffs_[index(degree_, a, b)];
}

const FieldElement& HomPoly::at(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a + b + c != degree_) throw InvalidArgument("exponent outside degree");
  return coeffs_[index(degree_, a, b)];
}

FieldElement HomPoly::eval(const std::array<FieldElement, 3>& v) const {
  FieldElement acc;
  for (int a = degree_; a >= 0; --a)
    for (int b = degree_ - a; b >= 0; --b) {
      const auto& k = coeffs_[index(degree_, a, b)];
      if (k.is_zero()) continue;
      acc += k * v[0].pow(a) * v[1].pow(b) * v[2].pow(degree_ - a - b);
    }
  return acc;
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HomPoly operator+(const HomPoly& p, const HomPoly& q) {
  if (p.degree_ != q.degree_) throw InvalidArgument("adding forms of different degree");
  HomPoly out = p;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += q.coeffs_[k];
  return out;
}

HomPoly operator-(const HomPoly& p, const HomPoly& q) { return p + FieldElement(-1) * q; }

HomPoly operator*(const HomPoly& p, const HomPoly& q) {
  HomPoly out(p.degree_ + q.degree_);
  for (int a = p.degree_; a >= 0; --a)
    for (int b = p.degree_ - a; b >= 0; --b) {
      const auto& x = p.coeffs_[HomPoly::index(p.degree_, a, b)];
      if (x.is_zero()) continue;
      for (int a2 = q.degree_; a2 >= 0; --a2)
        for (int b2 = q.degree_ - a2; b2 >= 0; --b2) {
          const auto& y = q.coeffs_[HomPoly::index(q.degree_, a2, b2)];
          if (y.is_zero()) continue;
          out.coeffs_[HomPoly::index(out.degree_, a + a2, b + b2)] += x * y;
        }
    }
  return out;
}

HomPoly operator*(const FieldElement& s, const HomPoly& p) {
  HomPoly out = p;
  for (auto& c : out.coeffs_) c = s * c;
  return out;
}

PairDescriptor::PairDescriptor(HesseCurve curve, ProjPoint p, int i)
    : curve_(std::move(curve)), p_(std::move(p)) {
  if (!curve_.contains(p_)) throw InvalidArgument("translation point " + p_.str() + " is not on the curve");
  const int n = curve_.auto_order();
  i_ = ((i % n) + n) % n;
}

ProjPoint PairDescriptor::sigma(const ProjPoint& q) const {
  return curve_.add(p_, curve_.automorphism(i_).apply(q));
}

std::array<HomPoly, 3> sigma_as_quadratic(const PairDescriptor& d, int branch) {
  const auto& [a, b, c] = d.point().coords();
  const exactfield::ExactMatrix m = d.curve().automorphism(d.exponent()).matrix;
  // Coordinates of tau^i(q) as linear forms in q.
  std::array<HomPoly, 3> t{HomPoly(1), HomPoly(1), HomPoly(1)};
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) t[r] = t[r] + m(r, k) * HomPoly::variable(k);
  const auto& [al, be, ga] = t;
  if (branch == 1)
    return {a * c * (be * be) - b * b * (al * ga), b * c * (al * al) - a * a * (be * ga),
            a * b * (ga * ga) - c * c * (al * be)};
  if (branch == 2)
    return {a * b * (al * al) - c * c * (be * ga), a * c * (ga * ga) - b * b * (al * be),
            b * c * (be * be) - a * a * (al * ga)};
  throw InvalidArgument("addition branch must be 1 or 2");
}

bool is_regular_pair(const PairDescriptor& d) {
  if (d.point().has_zero_coordinate()) return false;
  const auto& c = d.curve();
  const ProjPoint three_p = c.scalar_mul(3, d.point());
  return c.automorphism(d.exponent()).apply(three_p) == three_p;
}

hesse::CurveSubset isomorphism_orbit(const PairDescriptor& d) {
  const auto& c = d.curve();
  const auto shifts = hesse::u_upper(c, d.exponent());
  std::vector<ProjPoint> out;
  for (int l = 0; l < c.auto_order(); ++l) {
    const ProjPoint moved = c.automorphism(l).apply(d.point());
    for (const auto& r : shifts.points()) out.push_back(c.add(moved, r));
  }
  return hesse::CurveSubset::of(std::move(out));
}

bool pairs_isomorphic(const PairDescriptor& d1, const PairDescriptor& d2) {
  if (d1.exponent() != d2.exponent()) return false;
  if (d1.curve().lambda() != d2.curve().lambda()) return false;
  return isomorphism_orbit(d1).contains(d2.point());
}

}  // namespace typeec::geomalg
