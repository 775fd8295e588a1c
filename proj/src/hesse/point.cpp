#include "typeec/hesse/point.hpp"

#include "typeec/errors.hpp"
#include "typeec/exactfield/format.hpp"

namespace typeec::hesse {

ProjPoint::ProjPoint(FieldElement a, FieldElement b, FieldElement c) : coords_{std::move(a), std::move(b), std::move(c)} {
  std::size_t lead = 0;
  while (lead < 3 && coords_[lead].is_zero()) ++lead;
  if (lead == 3) throw InvalidArgument("(0:0:0) is not a projective point");
  if (coords_[lead].is_one()) return;
  const FieldElement inv = coords_[lead].inverse();
  coords_[lead] = FieldElement(1);
  for (std::size_t i = lead + 1; i < 3; ++i) coords_[i] *= inv;
}

bool ProjPoint::has_zero_coordinate() const {
  return coords_[0].is_zero() || coords_[1].is_zero() || coords_[2].is_zero();
}

std::string ProjPoint::str() const {
  using exactfield::to_string;
  return "(" + to_string(coords_[0]) + ":" + to_string(coords_[1]) + ":" + to_string(coords_[2]) + ")";
}

}  // namespace typeec::hesse
