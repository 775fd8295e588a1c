#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "typeec/exactfield/matrix.hpp"
#include "typeec/hesse/point.hpp"

namespace typeec::hesse {

using exactfield::ExactMatrix;
using exactfield::Tower;

/// Finite set of curve points, or the whole curve.
class CurveSubset {
 public:
  static CurveSubset entire_curve() { return CurveSubset(true, {}); }
  /// Deduplicates and sorts.
  static CurveSubset of(std::vector<ProjPoint> points);

  bool entire() const { return entire_; }
  /// Sorted, distinct. Empty when entire().
  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const ProjPoint& p) const;

  friend bool operator==(const CurveSubset&, const CurveSubset&) = default;

 private:
  CurveSubset(bool entire, std::vector<ProjPoint> points) : entire_(entire), points_(std::move(points)) {}
  bool entire_ = false;
  std::vector<ProjPoint> points_;
};

/// Which generator of the automorphisms fixing o_E the curve carries.
enum class AutoKind { tau1, tau2, tau3 };

const char* to_string(AutoKind kind);

/// A power of the generator, as a linear map on coordinates (points map by
/// p -> matrix * p).
struct CurveAuto {
  AutoKind kind;
  int exponent;  ///< in [0, order)
  int order;     ///< order of the generator: 2, 6 or 4
  ExactMatrix matrix;

  ProjPoint apply(const ProjPoint& p) const;
};

/// The Hesse cubic x^3+y^3+z^3-3*lambda*xyz, lambda^3 != 1.
///
/// lambda must lie in the default tower or an extension of it. The 2-torsion
/// abscissae are found once at construction, adjoining roots when needed,
/// and tower() is the field holding every torsion coordinate.
class HesseCurve {
 public:
  /// Throws InvalidArgument when lambda^3 = 1, or when j is 0 or 1728 but
  /// lambda is not 0 or 1+sqrt3 respectively.
  explicit HesseCurve(FieldElement lambda);

  const FieldElement& lambda() const { return data_->lambda; }
  const Tower& tower() const { return data_->tower; }
  FieldElement j_invariant() const;
  /// 27 l^3 (l^3+8)^3 / (l^3-1)^3.
  static FieldElement j_invariant_of(const FieldElement& lambda);

  bool contains(const ProjPoint& p) const;
  ProjPoint identity() const;

  /// One of the two addition formulas; nullopt when it gives (0:0:0).
  std::optional<ProjPoint> add_branch(const ProjPoint& p, const ProjPoint& q, int branch) const;
  /// Throws DegenerateAddition when both formulas vanish.
  ProjPoint add(const ProjPoint& p, const ProjPoint& q) const;
  ProjPoint neg(const ProjPoint& p) const;
  ProjPoint sub(const ProjPoint& p, const ProjPoint& q) const { return add(p, neg(q)); }
  ProjPoint scalar_mul(long n, const ProjPoint& p) const;

  /// E[n] for n in {2, 3, 6}.
  const CurveSubset& torsion(int n) const;
  /// E[2] in the order o_E, then the points (1:1:c) from simplest c.
  const std::vector<ProjPoint>& two_torsion_list() const { return data_->two_torsion_list; }

  AutoKind auto_kind() const { return data_->kind; }
  int auto_order() const;
  /// tau^i, exponent reduced modulo the order.
  CurveAuto automorphism(int i) const;

 private:
  struct Data {
    FieldElement lambda;
    Tower tower;
    AutoKind kind;
    std::vector<ProjPoint> two_torsion_list;
    CurveSubset e2 = CurveSubset::of({});
    CurveSubset e3 = CurveSubset::of({});
    CurveSubset e6 = CurveSubset::of({});
  };
  std::shared_ptr<const Data> data_;
};

/// The two generators of translations by 3-torsion, as coordinate maps:
/// translation by (1:-eps:0) and by (1:0:-1).
ExactMatrix translation_p1();
ExactMatrix translation_p2();

}  // namespace typeec::hesse
