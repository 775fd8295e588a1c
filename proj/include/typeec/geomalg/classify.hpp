#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "typeec/geomalg/pair.hpp"

namespace typeec::geomalg {

enum class TypeTag { A, B, E, H };

const char* to_string(TypeTag tag);

/// Tag of sigma_p tau^i on a curve with generator of the given kind; nullopt
/// for tau2 and tau2^5, which never give a regular algebra.
std::optional<TypeTag> type_of(hesse::AutoKind kind, int i);

/// The Type A condition read literally: abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3.
bool type_a_condition(const ProjPoint& p);

/// One isomorphism class of regular pairs sigma_p tau^i, i != 0.
struct TypeClass {
  TypeTag tag;
  int exponent;
  ProjPoint representative;
  std::size_t members;  ///< regular translation points in the class
  RelationSpace relations;
  /// (tau^2 (x) tau (x) id)(w_p) at the representative when tau^i preserves
  /// w_p up to scalar. Otherwise (Type E) the twist has the right relations
  /// but is not a twisted superpotential, and the generator of
  /// (V (x) R) intersect (R (x) V) is used instead.
  Tensor3 potential;
  bool potential_is_twist;
};

struct Classification {
  HesseCurve curve;
  std::vector<TypeClass> classes;     ///< by exponent, then representative
  std::vector<ProjPoint> type_a_samples;

  std::map<TypeTag, std::size_t> counts() const;
};

/// Enumerates the regular pairs with i != 0 over the finite sets
/// U_{tau^i} minus E[3] and partitions them into isomorphism classes.
/// Representatives prefer 2-torsion points (in two_torsion_list order), then
/// the order-nine base point, then the smallest point in the class.
Classification classify(const HesseCurve& c);

nlohmann::json to_json(const Classification& report);

}  // namespace typeec::geomalg
