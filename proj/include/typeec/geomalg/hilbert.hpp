#pragma once

#include <vector>

#include "typeec/geomalg/pair.hpp"

namespace typeec::geomalg {

/// dim A_n for n = 0..nmax of T(V)/(R), by exact rank of the degree-n part of
/// the ideal. nmax is at most 5.
std::vector<std::size_t> hilbert_dims(const RelationSpace& rel, int nmax);

}  // namespace typeec::geomalg
