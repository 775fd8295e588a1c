#include "typeec/exactfield/format.hpp"

#include <ostream>
#include <utility>

#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"

namespace typeec::exactfield {

namespace {

struct Term {
  std::vector<std::pair<const TowerLevel*, std::size_t>> powers;  // lower levels first
  Rational coeff;
};

void expand(const FieldElement& x, std::vector<Term>& out) {
  if (x.is_rational()) {
    out.push_back({{}, x.as_rational()});
    return;
  }
  auto coeffs = x.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<Term> inner;
    expand(coeffs[i], inner);
    for (auto& t : inner) {
      if (t.coeff.is_zero()) continue;
      if (i > 0) t.powers.emplace_back(x.level(), i);
      out.push_back(std::move(t));
    }
  }
}

std::string power_name(const TowerLevel* level, std::size_t k) {
  const auto& dt = default_tower();
  if (level == dt.eta_level.get() && k == 3) return "eps";
  if (level == dt.qrt3_level.get() && k == 2) return "sqrt3";
  if (level == dt.qrt3_level.get() && k == 3) return "sqrt3*qrt3";
  if (k == 1) return level->name();
  return level->name() + "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const FieldElement& x) {
  if (x.is_zero()) return "0";
  std::vector<Term> terms;
  expand(x, terms);
  std::string out;
  for (const auto& t : terms) {
    std::string factors;
    for (const auto& [level, k] : t.powers) {
      if (!factors.empty()) factors += "*";
      factors += power_name(level, k);
    }
    std::string piece;
    if (factors.empty()) {
      piece = t.coeff.pretty();
    } else if (t.coeff.is_one()) {
      piece = factors;
    } else if (t.coeff == Rational(-1)) {
      piece = "-" + factors;
    } else {
      piece = t.coeff.pretty() + "*" + factors;
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << to_string(x); }

nlohmann::json to_json(const FieldElement& x, const Tower& frame) {
  if (!belongs_to(x, frame)) throw TowerMismatch();
  if (!frame) return x.as_rational().str();
  std::vector<FieldElement> coeffs(frame->degree());
  if (x.level() == frame.get()) {
    auto c = x.coefficients();
    std::copy(c.begin(), c.end(), coeffs.begin());
  } else {
    coeffs[0] = x;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(to_json(c, frame->base()));
  return arr;
}

FieldElement from_json(const nlohmann::json& j, const Tower& frame) {
  if (!frame) {
    if (!j.is_string()) throw InvalidArgument("expected a \"num/den\" string");
    return FieldElement(Rational::parse(j.get<std::string>()));
  }
  if (!j.is_array() || j.size() != frame->degree()) {
    throw InvalidArgument("expected an array of " + std::to_string(frame->degree()) +
                          " coefficients for level '" + frame->name() + "'");
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) coeffs.push_back(from_json(e, frame->base()));
  return FieldElement::from_coefficients(frame, std::move(coeffs));
}

nlohmann::json tower_to_json(const Tower& tower) {
  nlohmann::json out = nlohmann::json::array();
  if (!tower) return out;
  for (const TowerLevel* level : tower->chain()) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& c : level->minimal_poly()) poly.push_back(to_json(c, level->base()));
    out.push_back({{"name", level->name()}, {"minimal_poly", poly}});
  }
  return out;
}

}  // namespace typeec::exactfield
