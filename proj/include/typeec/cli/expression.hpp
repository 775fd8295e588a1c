#pragma once

#include <map>
#include <string>
#include <string_view>

#include "typeec/exactfield/field.hpp"
#include "typeec/hesse/point.hpp"
#include "typeec/tensor/tensor.hpp"

namespace typeec::cli {

using exactfield::FieldElement;
using exactfield::Tower;

/// Extra named constants, e.g. {"c", ...} or {"lambda", ...}.
using Bindings = std::map<std::string, FieldElement, std::less<>>;

/// Exact value of an expression over integers, + - * / ^ (integer
/// exponents), parentheses, juxtaposition as multiplication, and the symbols
/// eps, eta, sqrt3, qrt3, cbrt2, the generator names of `tower`, and
/// `bindings`. Throws ParseError (with position) or UnknownSymbol.
FieldElement parse_scalar(std::string_view expr, const Tower& tower = nullptr, const Bindings& bindings = {});

/// A cubic noncommutative polynomial in x, y, z such as
/// "xzx+eta zx^2+eta^8 x^2z" (x^2z is xxz). Same scalar grammar as above.
/// Throws ParseError when the result is not homogeneous of degree 3.
tensor::Tensor3 parse_potential(std::string_view expr, const Tower& tower = nullptr, const Bindings& bindings = {});

/// "A:B:C" with each coordinate parsed by parse_scalar.
hesse::ProjPoint parse_point(std::string_view expr, const Tower& tower = nullptr);

}  // namespace typeec::cli
