#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "typeec/exactfield/field.hpp"

namespace typeec::exactfield {

/// Expression over the generator names, e.g. "1+sqrt3" or "-1/2*eta^2*cbrt2".
/// The output parses back to the same element.
std::string to_string(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Nested arrays of "num/den" strings relative to `frame`: the outermost array
/// holds the coefficients of the powers of the top generator, each entry is
/// the same encoding one level down, and the innermost arrays belong to the
/// first level above Q. A rational frame yields a bare string.
nlohmann::json to_json(const FieldElement& x, const Tower& frame);
FieldElement from_json(const nlohmann::json& j, const Tower& frame);

/// [{"name": ..., "minimal_poly": [coefficients low to high]}], bottom level first.
nlohmann::json tower_to_json(const Tower& tower);

}  // namespace typeec::exactfield
