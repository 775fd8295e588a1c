#pragma once

#include "typeec/cli/report.hpp"

namespace typeec::cli {

/// Runs every consistency check on the curves lambda = 5/3, 0 and 1+sqrt3:
/// group law, torsion, loci, classification, relation/potential coherence,
/// witnesses, automorphism scalars, Hilbert dimensions, the Type E
/// obstruction, and the comparison with the reference tables. Deterministic.
Report verify_tables();

}  // namespace typeec::cli
