#include "typeec/errors.hpp"
#include "typeec/geomalg/pair.hpp"

namespace typeec::geomalg {

using exactfield::ExactMatrix;
using exactfield::Vector;

RelationSpace::RelationSpace(const std::vector<Tensor2>& spanning) {
  std::vector<Vector> rows;
  for (const auto& t : spanning) rows.push_back(t.as_vector());
  for (const auto& v : exactfield::canonical_span(rows, 9)) basis_.emplace_back(v);
}

RelationSpace relations_from_branch(const PairDescriptor& d, int branch) {
  const auto s = sigma_as_quadratic(d, branch);
  const HomPoly g = HomPoly::hesse_cubic(d.curve().lambda());
  // Unknowns: c_jk at column 3j + k, then the multiplier of g.
  ExactMatrix m(g.coefficients().size(), 10);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const HomPoly cubic = HomPoly::variable(j) * s[k];
      for (std::size_t row = 0; row < m.rows(); ++row) m(row, 3 * j + k) = cubic.coefficients()[row];
    }
  for (std::size_t row = 0; row < m.rows(); ++row) m(row, 9) = -g.coefficients()[row];
  std::vector<Tensor2> found;
  for (const auto& v : exactfield::nullspace(m)) found.emplace_back(std::span<const FieldElement>(v.data(), 9));
  return RelationSpace(found);
}

RelationSpace relations_from_pair(const PairDescriptor& d) {
  const RelationSpace one = relations_from_branch(d, 1);
  const RelationSpace two = relations_from_branch(d, 2);
  std::vector<Vector> first, second;
  for (const auto& t : one.basis()) first.push_back(t.as_vector());
  for (const auto& t : two.basis()) second.push_back(t.as_vector());
  std::vector<Tensor2> common;
  for (const auto& v : exactfield::intersect_spans(first, second, 9)) common.emplace_back(v);
  RelationSpace out(common);
  if (out.dimension() != 3 && is_regular_pair(d)) throw UnexpectedDimension(out.dimension(), 3);
  return out;
}

RelationSpace derivation_quotient_relations(const Tensor3& w) {
  return RelationSpace({tensor::left_deriv(w, 0), tensor::left_deriv(w, 1), tensor::left_deriv(w, 2)});
}

ProjPoint fiber_at(const RelationSpace& rel, const ProjPoint& r) {
  ExactMatrix m(rel.dimension(), 3);
  for (std::size_t row = 0; row < rel.dimension(); ++row)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) {
        const auto& f = rel.basis()[row](j, k);
        if (!f.is_zero() && !r[j].is_zero()) m(row, k) += f * r[j];
      }
  const auto kernel = exactfield::nullspace(m);
  if (kernel.size() != 1) throw FiberNotPoint(kernel.size());
  return ProjPoint(kernel[0][0], kernel[0][1], kernel[0][2]);
}

std::optional<Tensor3> potential_from_relations(const RelationSpace& rel) {
  std::vector<Vector> left, right;
  for (const auto& f : rel.basis())
    for (int i = 0; i < 3; ++i) {
      Vector l(27), r(27);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          l[9 * i + 3 * j + k] = f(j, k);
          r[9 * j + 3 * k + i] = f(j, k);
        }
      left.push_back(std::move(l));
      right.push_back(std::move(r));
    }
  const auto common = exactfield::intersect_spans(left, right, 27);
  if (common.size() != 1) return std::nullopt;
  return Tensor3(common[0]);
}

}  // namespace typeec::geomalg
