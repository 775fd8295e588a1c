#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typeec/exactfield/upoly.hpp"

namespace typeec::exactfield {

/// Roots of `p` in `tower` found by trial: rational-root candidates for
/// rational polynomials, then r + s*m for small rationals r, s and m a power
/// product of the tower generators. Distinct roots only. Not a factorization
/// algorithm: a root outside the candidate set is missed.
std::vector<FieldElement> trial_roots(const UPoly& p, const Tower& tower);

/// Result of splitting a polynomial: the (possibly extended) tower and all roots.
struct Splitting {
  Tower tower;
  std::vector<FieldElement> roots;
};

/// Splits a monic polynomial of degree 1..3 over `tower` into linear factors.
/// Roots are first searched by trial; a remaining irreducible-looking cubic or
/// quadratic factor is adjoined (dynamic evaluation). New generators are named
/// sqrt<m> for square roots of squarefree integers, otherwise <hint><k>.
Splitting split(const UPoly& p, const Tower& tower, const std::string& hint = "rho");

}  // namespace typeec::exactfield
