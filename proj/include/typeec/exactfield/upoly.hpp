#pragma once

#include <utility>
#include <vector>

#include "typeec/exactfield/field.hpp"

namespace typeec::exactfield {

/// Dense univariate polynomial over a tower, coefficients low to high.
using UPoly = std::vector<FieldElement>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for the zero polynomial
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const FieldElement& s);
/// Quotient and remainder; `den` must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
FieldElement eval(const UPoly& p, const FieldElement& x);
UPoly monic(const UPoly& p);

}  // namespace upoly
}  // namespace typeec::exactfield
