#pragma once

#include <array>
#include <vector>

#include "typeec/hesse/curve.hpp"
#include "typeec/tensor/tensor.hpp"

namespace typeec::geomalg {

using exactfield::FieldElement;
using hesse::HesseCurve;
using hesse::ProjPoint;
using tensor::Tensor2;
using tensor::Tensor3;

/// Homogeneous polynomial in three variables. Coefficients follow the
/// exponents (a, b, c) of x^a y^b z^c in decreasing lexicographic order.
class HomPoly {
 public:
  explicit HomPoly(int degree);
  static HomPoly variable(int i);
  /// x^3 + y^3 + z^3 - 3 lambda xyz.
  static HomPoly hesse_cubic(const FieldElement& lambda);

  int degree() const { return degree_; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement& at(int a, int b, int c);
  const FieldElement& at(int a, int b, int c) const;
  FieldElement eval(const std::array<FieldElement, 3>& v) const;
  bool is_zero() const;

  friend HomPoly operator+(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator-(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator*(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator*(const FieldElement& s, const HomPoly& p);
  friend bool operator==(const HomPoly&, const HomPoly&) = default;

 private:
  static std::size_t index(int degree, int a, int b);
  int degree_;
  std::vector<FieldElement> coeffs_;
};

/// The automorphism q -> tau^i(q) + p of a Hesse curve, tau the curve's
/// generator.
class PairDescriptor {
 public:
  /// Throws InvalidArgument when p is not on the curve. i is reduced modulo
  /// the order of tau.
  PairDescriptor(HesseCurve curve, ProjPoint p, int i);

  const HesseCurve& curve() const { return curve_; }
  const ProjPoint& point() const { return p_; }
  int exponent() const { return i_; }

  ProjPoint sigma(const ProjPoint& q) const;

 private:
  HesseCurve curve_;
  ProjPoint p_;
  int i_;
};

/// Quadratic forms S with sigma(q) = (S_1(q):S_2(q):S_3(q)) wherever the
/// chosen addition formula (1 or 2) does not vanish.
std::array<HomPoly, 3> sigma_as_quadratic(const PairDescriptor& d, int branch);

/// Subspace of V (x) V, stored as its reduced echelon basis.
class RelationSpace {
 public:
  RelationSpace() = default;
  /// Canonicalizes the span of the given tensors.
  explicit RelationSpace(const std::vector<Tensor2>& spanning);

  const std::vector<Tensor2>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  friend bool operator==(const RelationSpace&, const RelationSpace&) = default;

 private:
  std::vector<Tensor2> basis_;
};

/// Quadratic relations vanishing on the graph of sigma: all f with
/// f(q, sigma(q)) = 0 on the curve, found as the f whose cubic
/// f(q, S(q)) is a multiple of the Hesse cubic, for each addition formula,
/// then intersected. Throws UnexpectedDimension for a regular pair whose
/// space is not 3-dimensional.
RelationSpace relations_from_pair(const PairDescriptor& d);
/// Same, for a single addition formula.
RelationSpace relations_from_branch(const PairDescriptor& d, int branch);

/// Span of the three left derivatives.
RelationSpace derivation_quotient_relations(const Tensor3& w);

/// The line {(1, 2) slot}: fixing the first factor at r, the relations cut
/// out a single point in the second factor. Throws FiberNotPoint otherwise.
ProjPoint fiber_at(const RelationSpace& rel, const ProjPoint& r);

/// p off E[3] and tau^i(3p) = 3p.
bool is_regular_pair(const PairDescriptor& d);

/// Same exponent and d2's point in {tau^l(p) + r : l, r in U^{tau^i}}.
bool pairs_isomorphic(const PairDescriptor& d1, const PairDescriptor& d2);

/// The finite set {tau^l(p) + r} above.
hesse::CurveSubset isomorphism_orbit(const PairDescriptor& d);

/// Generator of (V (x) R) intersect (R (x) V), when that space is a line.
/// For the algebras here it is the twisted superpotential of the algebra.
std::optional<Tensor3> potential_from_relations(const RelationSpace& rel);

}  // namespace typeec::geomalg
