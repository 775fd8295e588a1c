#include "typeec/exactfield/default_tower.hpp"

namespace typeec::exactfield {

namespace {

DefaultTower build() {
  DefaultTower t;
  t.eta_level = TowerLevel::adjoin(nullptr, {1, 0, 0, 1, 0, 0, 1}, "eta");
  t.qrt3_level = TowerLevel::adjoin(t.eta_level, {-3, 0, 0, 0, 1}, "qrt3");
  t.cbrt2_level = TowerLevel::adjoin(t.qrt3_level, {-2, 0, 0, 1}, "cbrt2");
  t.eta = FieldElement::generator(t.eta_level);
  t.eps = t.eta.pow(3);
  t.qrt3 = FieldElement::generator(t.qrt3_level);
  t.sqrt3 = t.qrt3 * t.qrt3;
  t.cbrt2 = FieldElement::generator(t.cbrt2_level);
  return t;
}

}  // namespace

const DefaultTower& default_tower() {
  static const DefaultTower tower = build();
  return tower;
}

}  // namespace typeec::exactfield
