#pragma once

#include "typeec/exactfield/field.hpp"

namespace typeec::exactfield {

/// Q(eta)(qrt3)(cbrt2): eta a root of t^6+t^3+1 (primitive 9th root of unity),
/// qrt3 a root of t^4-3, cbrt2 a root of t^3-2. Degree 72 over Q.
struct DefaultTower {
  Tower eta_level;
  Tower qrt3_level;
  Tower cbrt2_level;

  FieldElement eta;    ///< primitive 9th root of unity
  FieldElement eps;    ///< eta^3, primitive 3rd root of unity
  FieldElement qrt3;   ///< fourth root of 3
  FieldElement sqrt3;  ///< qrt3^2
  FieldElement cbrt2;  ///< real cube root of 2

  const Tower& top() const { return cbrt2_level; }
};

/// Built once on first use; immutable afterwards.
const DefaultTower& default_tower();

}  // namespace typeec::exactfield
