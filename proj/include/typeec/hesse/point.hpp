#pragma once

#include <array>
#include <compare>
#include <string>

#include "typeec/exactfield/field.hpp"

namespace typeec::hesse {

using exactfield::FieldElement;

/// Point of the projective plane, scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  /// Throws InvalidArgument for (0:0:0).
  ProjPoint(FieldElement a, FieldElement b, FieldElement c);

  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<FieldElement, 3>& coords() const { return coords_; }

  /// Product of the coordinates is zero; on a Hesse curve this is exactly E[3].
  bool has_zero_coordinate() const;

  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::array<FieldElement, 3> coords_;
};

}  // namespace typeec::hesse
