#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "typeec/exactfield/rational.hpp"

namespace typeec::exactfield {

class TowerLevel;

/// Handle to the top level of a tower of simple algebraic extensions of Q.
/// A null handle denotes Q itself.
using Tower = std::shared_ptr<const TowerLevel>;

/// Exact element of a tower of algebraic extensions of Q.
///
/// An element is stored at the lowest level that contains it: either a
/// rational, or a polynomial of degree in [1, deg) in the generator of its
/// level whose coefficients are elements of strictly lower levels. Together
/// with reduction modulo each minimal polynomial this makes the
/// representation canonical, so equality is structural.
///
/// Elements are immutable and share their storage; copies are cheap.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : rep_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational value) : rep_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  /// The adjoined root of `level`.
  static FieldElement generator(const Tower& level);
  /// Sum of coeffs[i] * t^i with t the generator of `level`, reduced.
  static FieldElement from_coefficients(const Tower& level, std::vector<FieldElement> coeffs);

  /// Level this element lives on; nullptr for rationals.
  const TowerLevel* level() const;
  Tower level_handle() const;
  int depth() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(rep_); }
  const Rational& as_rational() const;
  /// Coefficients in the generator of level(); empty for rationals.
  std::span<const FieldElement> coefficients() const;

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }
  FieldElement& operator/=(const FieldElement& other) { return *this = *this / other; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Deterministic total order on canonical forms (not an ordered-field order).
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  struct Poly;
  static FieldElement make(const Tower& level, std::vector<FieldElement> coeffs);
  static FieldElement reduce(const Tower& level, std::vector<FieldElement> coeffs);

  std::variant<Rational, std::shared_ptr<const Poly>> rep_;
};

/// One simple extension K(t)/K with K the base level. Immutable.
class TowerLevel {
 public:
  /// Adjoins a root of `monic_poly` (coefficients low to high, leading 1) to
  /// `base`. The polynomial is assumed irreducible; if it is not, later
  /// arithmetic raises ZeroDivisor.
  static Tower adjoin(const Tower& base, std::vector<FieldElement> monic_poly, std::string name);

  const Tower& base() const { return base_; }
  int depth() const { return depth_; }
  std::size_t degree() const { return minimal_poly_.size() - 1; }
  const std::string& name() const { return name_; }
  std::span<const FieldElement> minimal_poly() const { return minimal_poly_; }

  /// True when `other` is this level, one of its bases, or Q (nullptr).
  bool contains(const TowerLevel* other) const;
  /// Levels from the bottom (depth 1) up to this one.
  std::vector<const TowerLevel*> chain() const;

 private:
  TowerLevel(Tower base, std::vector<FieldElement> poly, std::string name);

  Tower base_;
  int depth_;
  std::vector<FieldElement> minimal_poly_;
  std::string name_;
};

/// True when every level used by `x` belongs to `tower`.
bool belongs_to(const FieldElement& x, const Tower& tower);

/// Handle whose level is the deeper of the two; throws TowerMismatch when the
/// towers are not nested.
Tower join(const Tower& a, const Tower& b);

}  // namespace typeec::exactfield
