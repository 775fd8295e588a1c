#pragma once

#include <string>
#include <vector>

namespace typeec::cli {

/// A potential from the reference list, transcribed to the parse_potential
/// grammar. The symbols c and lambda are bound while parsing.
struct ReferencePotential {
  std::string name;
  std::string text;
  std::string condition;  ///< polynomial in c and lambda that must vanish, or empty
};

/// Rows as printed, misprints included: Type B, Type E for tau2^2 and tau2^4,
/// Type H for tau3 and tau3^3.
const ReferencePotential& type_b_printed();
const ReferencePotential& type_e_first();
const ReferencePotential& type_e_second();
const ReferencePotential& type_h_first();
const ReferencePotential& type_h_third();

/// The Type B row as derived in the accompanying computation, with x^2z in
/// place of the printed x^z and the condition c^3-3 lambda c+2.
const ReferencePotential& type_b_derived();

/// The Type H rows with the y-group monomial read as xy^2 rather than the
/// printed yx^2, which otherwise appears twice.
const ReferencePotential& type_h_first_derived();
const ReferencePotential& type_h_third_derived();

/// The three left derivatives displayed for the first Type E row.
const std::vector<std::string>& type_e_displayed_derivatives();

/// Scalars printed for right = scalar * left derivative, shared by both
/// Type E rows.
const std::vector<std::string>& type_e_printed_scalars();

/// The translation point q' = tau2(q) attached to the second Type E row.
const std::string& type_e_second_point();

/// The 18 points of order 9 listed for U_{tau2^2} at lambda = 0.
const std::vector<std::string>& order_nine_listing();

/// The lambda = 0 abscissae of E[2] minus o_E: c with (1:1:c) of order 2.
const std::vector<std::string>& j0_two_torsion_listing();

}  // namespace typeec::cli
