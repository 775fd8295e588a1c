#include "typeec/exactfield/upoly.hpp"

#include "typeec/errors.hpp"

namespace typeec::exactfield::upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!p[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

UPoly scale(const UPoly& a, const FieldElement& s) {
  UPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c * s);
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den) {
  const int dd = degree(den);
  if (dd < 0) throw DivisionByZero();
  UPoly rem = num;
  trim(rem);
  const FieldElement lead_inv = den[dd].inverse();
  UPoly quot;
  if (degree(rem) >= dd) quot.resize(rem.size() - dd);
  for (int k = degree(rem); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    FieldElement c = rem[k] * lead_inv;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      if (den[j].is_zero()) continue;
      rem[k - dd + j] -= c * den[j];
    }
    rem[k] = FieldElement();
  }
  trim(quot);
  trim(rem);
  return {std::move(quot), std::move(rem)};
}

FieldElement eval(const UPoly& p, const FieldElement& x) {
  FieldElement acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly monic(const UPoly& p) {
  int d = degree(p);
  if (d < 0) throw DivisionByZero();
  return scale(p, p[d].inverse());
}

}  // namespace typeec::exactfield::upoly
