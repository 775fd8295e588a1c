#include "typeec/exactfield/field.hpp"

#include <algorithm>
#include <set>

#include "typeec/errors.hpp"

namespace typeec::exactfield {

struct FieldElement::Poly {
  Tower level;
  std::vector<FieldElement> coeffs;  // 2 <= size <= degree, last entry nonzero
};

namespace {

const Rational kZero{0};

const TowerLevel* deeper_checked(const TowerLevel* a, const TowerLevel* b) {
  if (a == b) return a;
  int da = a ? a->depth() : 0;
  int db = b ? b->depth() : 0;
  if (da >= db) {
    if (!a->contains(b)) throw TowerMismatch();
    return a;
  }
  if (!b->contains(a)) throw TowerMismatch();
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerLevel

TowerLevel::TowerLevel(Tower base, std::vector<FieldElement> poly, std::string name)
    : base_(std::move(base)),
      depth_(base_ ? base_->depth() + 1 : 1),
      minimal_poly_(std::move(poly)),
      name_(std::move(name)) {}

Tower TowerLevel::adjoin(const Tower& base, std::vector<FieldElement> monic_poly,
                         std::string name) {
  if (monic_poly.size() < 3) throw InvalidArgument("adjoined polynomial must have degree >= 2");
  if (!monic_poly.back().is_one()) throw InvalidArgument("adjoined polynomial must be monic");
  for (const auto& c : monic_poly) {
    if (!belongs_to(c, base)) throw TowerMismatch();
  }
  if (name.empty()) throw InvalidArgument("generator name must not be empty");
  for (const TowerLevel* l = base.get(); l; l = l->base().get()) {
    if (l->name() == name) throw InvalidArgument("generator name '" + name + "' already used in tower");
  }
  return Tower(new TowerLevel(base, std::move(monic_poly), std::move(name)));
}

bool TowerLevel::contains(const TowerLevel* other) const {
  for (const TowerLevel* l = this; l; l = l->base().get()) {
    if (l == other) return true;
  }
  return other == nullptr;
}

std::vector<const TowerLevel*> TowerLevel::chain() const {
  std::vector<const TowerLevel*> out;
  for (const TowerLevel* l = this; l; l = l->base().get()) out.push_back(l);
  std::reverse(out.begin(), out.end());
  return out;
}

bool belongs_to(const FieldElement& x, const Tower& tower) {
  const TowerLevel* l = x.level();
  if (!l) return true;
  return tower && tower->contains(l);
}

Tower join(const Tower& a, const Tower& b) {
  const TowerLevel* d = deeper_checked(a.get(), b.get());
  return d == a.get() ? a : b;
}

// ---------------------------------------------------------------------------
// FieldElement: construction and accessors

FieldElement FieldElement::make(const Tower& level, std::vector<FieldElement> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return FieldElement();
  if (coeffs.size() == 1) return std::move(coeffs.front());
  FieldElement out;
  out.rep_ = std::make_shared<const Poly>(Poly{level, std::move(coeffs)});
  return out;
}

FieldElement FieldElement::reduce(const Tower& level, std::vector<FieldElement> coeffs) {
  const std::size_t d = level->degree();
  auto m = level->minimal_poly();
  for (std::size_t k = coeffs.size(); k-- > d;) {
    if (coeffs[k].is_zero()) continue;
    const FieldElement c = coeffs[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (m[j].is_zero()) continue;
      coeffs[k - d + j] -= c * m[j];
    }
    coeffs[k] = FieldElement();
  }
  if (coeffs.size() > d) coeffs.resize(d);
  return make(level, std::move(coeffs));
}

FieldElement FieldElement::generator(const Tower& level) {
  if (!level) throw InvalidArgument("Q has no generator");
  return reduce(level, {FieldElement(0), FieldElement(1)});
}

FieldElement FieldElement::from_coefficients(const Tower& level, std::vector<FieldElement> coeffs) {
  if (!level) {
    FieldElement sum;
    if (!coeffs.empty()) sum = coeffs.front();
    if (coeffs.size() > 1) throw InvalidArgument("coefficients above degree 0 over Q");
    return sum;
  }
  for (const auto& c : coeffs) {
    if (!belongs_to(c, level->base())) throw TowerMismatch();
  }
  return reduce(level, std::move(coeffs));
}

const TowerLevel* FieldElement::level() const {
  if (is_rational()) return nullptr;
  return std::get<std::shared_ptr<const Poly>>(rep_)->level.get();
}

Tower FieldElement::level_handle() const {
  if (is_rational()) return nullptr;
  return std::get<std::shared_ptr<const Poly>>(rep_)->level;
}

int FieldElement::depth() const {
  const TowerLevel* l = level();
  return l ? l->depth() : 0;
}

bool FieldElement::is_zero() const {
  return is_rational() && std::get<Rational>(rep_).is_zero();
}

bool FieldElement::is_one() const {
  return is_rational() && std::get<Rational>(rep_).is_one();
}

const Rational& FieldElement::as_rational() const {
  if (!is_rational()) throw InvalidArgument("field element is not rational");
  return std::get<Rational>(rep_);
}

std::span<const FieldElement> FieldElement::coefficients() const {
  if (is_rational()) return {};
  return std::get<std::shared_ptr<const Poly>>(rep_)->coeffs;
}

// ---------------------------------------------------------------------------
// Arithmetic

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(-std::get<Rational>(rep_));
  const auto& p = *std::get<std::shared_ptr<const Poly>>(rep_);
  std::vector<FieldElement> out;
  out.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.push_back(-c);
  return make(p.level, std::move(out));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return FieldElement(a.as_rational() + b.as_rational());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const TowerLevel* top = deeper_checked(a.level(), b.level());
  if (a.level() == b.level()) {
    auto ca = a.coefficients();
    auto cb = b.coefficients();
    std::vector<FieldElement> out(std::max(ca.size(), cb.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < ca.size() && i < cb.size()) {
        out[i] = ca[i] + cb[i];
      } else {
        out[i] = i < ca.size() ? ca[i] : cb[i];
      }
    }
    return FieldElement::make(a.level_handle(), std::move(out));
  }
  const FieldElement& hi = top == a.level() ? a : b;
  const FieldElement& lo = top == a.level() ? b : a;
  auto ch = hi.coefficients();
  std::vector<FieldElement> out(ch.begin(), ch.end());
  out[0] = out[0] + lo;
  return FieldElement::make(hi.level_handle(), std::move(out));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return FieldElement(a.as_rational() * b.as_rational());
  if (a.is_zero() || b.is_zero()) return FieldElement();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const TowerLevel* top = deeper_checked(a.level(), b.level());
  if (a.level() == b.level()) {
    auto ca = a.coefficients();
    auto cb = b.coefficients();
    std::vector<FieldElement> out(ca.size() + cb.size() - 1);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i].is_zero()) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) {
        if (cb[j].is_zero()) continue;
        out[i + j] += ca[i] * cb[j];
      }
    }
    return FieldElement::reduce(a.level_handle(), std::move(out));
  }
  const FieldElement& hi = top == a.level() ? a : b;
  const FieldElement& lo = top == a.level() ? b : a;
  std::vector<FieldElement> out;
  for (const auto& c : hi.coefficients()) out.push_back(c * lo);
  return FieldElement::make(hi.level_handle(), std::move(out));
}

namespace {

// Rough size of an element, used to pick cheap pivots.
std::size_t pivot_weight(const FieldElement& x) {
  if (x.is_rational()) return 0;
  std::size_t w = 0;
  for (const auto& c : x.coefficients())
    if (!c.is_zero()) w += 1 + pivot_weight(c);
  return w;
}

}  // namespace

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(as_rational().inverse());
  const auto& p = *std::get<std::shared_ptr<const Poly>>(rep_);
  // Solve x * y = 1 as a linear system over the base: column j of the
  // multiplication matrix holds the coefficients of x * t^j. Far cheaper than
  // a Euclidean inverse once the base is itself an extension.
  const std::size_t d = p.level->degree();
  const FieldElement t = generator(p.level);
  std::vector<std::vector<FieldElement>> m(d, std::vector<FieldElement>(d + 1));
  FieldElement column = *this;
  for (std::size_t j = 0; j < d; ++j) {
    if (column.level() == p.level.get()) {
      auto c = column.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) m[i][j] = c[i];
    } else {
      m[0][j] = column;
    }
    if (j + 1 < d) column = column * t;
  }
  m[0][d] = FieldElement(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t best = d;
    for (std::size_t i = col; i < d; ++i) {
      if (m[i][col].is_zero()) continue;
      if (best == d || pivot_weight(m[i][col]) < pivot_weight(m[best][col])) best = i;
    }
    if (best == d) throw ZeroDivisor(p.level->name());
    std::swap(m[col], m[best]);
    const FieldElement inv = m[col][col].inverse();
    for (std::size_t j = col; j <= d; ++j)
      if (!m[col][j].is_zero()) m[col][j] = m[col][j] * inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const FieldElement f = m[i][col];
      for (std::size_t j = col; j <= d; ++j)
        if (!m[col][j].is_zero()) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  std::vector<FieldElement> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d];
  return make(p.level, std::move(y));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return FieldElement();
  return a * b.inverse();
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Comparison

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.as_rational() == b.as_rational();
  if (a.level() != b.level()) return false;
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  if (a.is_rational()) return a.as_rational() <=> b.as_rational();
  if (a.level() != b.level()) {
    if (auto c = a.level()->name() <=> b.level()->name(); c != 0) return c;
    return std::less<const TowerLevel*>{}(a.level(), b.level()) ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  }
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  if (auto c = ca.size() <=> cb.size(); c != 0) return c;
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace typeec::exactfield
