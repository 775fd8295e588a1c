#include "typeec/tensor/tensor.hpp"

#include "typeec/errors.hpp"
#include "typeec/exactfield/format.hpp"

namespace typeec::tensor {

namespace {

constexpr char kNames[3] = {'x', 'y', 'z'};

template <typename Terms>
std::string join_terms(const Terms& ts) {
  if (ts.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : ts) {
    std::string piece;
    if (coeff.is_one()) {
      piece = mono;
    } else if (coeff == FieldElement(-1)) {
      piece = "-" + mono;
    } else {
      std::string c = exactfield::to_string(coeff);
      const bool compound = c.find_first_of("+-", 1) != std::string::npos;
      piece = (compound ? "(" + c + ")" : c) + "*" + mono;
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

}  // namespace

Tensor2::Tensor2(std::span<const FieldElement> coeffs) {
  if (coeffs.size() != 9) throw InvalidArgument("a 2-tensor has 9 coefficients");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

bool Tensor2::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (std::size_t i = 0; i < 9; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (std::size_t i = 0; i < 9; ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

Tensor2 operator*(const FieldElement& s, const Tensor2& a) {
  Tensor2 out;
  for (std::size_t i = 0; i < 9; ++i) out.c_[i] = s * a.c_[i];
  return out;
}

Tensor3::Tensor3(std::span<const FieldElement> coeffs) {
  if (coeffs.size() != 27) throw InvalidArgument("a 3-tensor has 27 coefficients");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Tensor3 Tensor3::monomial(int i, int j, int k) {
  Tensor3 t;
  t(i, j, k) = FieldElement(1);
  return t;
}

bool Tensor3::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  Tensor3 out;
  for (std::size_t i = 0; i < 27; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  Tensor3 out;
  for (std::size_t i = 0; i < 27; ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

Tensor3 operator*(const FieldElement& s, const Tensor3& a) {
  Tensor3 out;
  for (std::size_t i = 0; i < 27; ++i) out.c_[i] = s * a.c_[i];
  return out;
}

LinMap::LinMap(ExactMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 3 || m_.cols() != 3) throw InvalidArgument("a linear map on V is 3x3");
}

bool LinMap::invertible() const { return exactfield::rank(m_) == 3; }

LinMap LinMap::inverse() const { return LinMap(exactfield::inverse(m_)); }

Tensor2 left_deriv(const Tensor3& w, int i) {
  Tensor2 out;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out(j, k) = w(i, j, k);
  return out;
}

Tensor2 right_deriv(const Tensor3& w, int k) {
  Tensor2 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = w(i, j, k);
  return out;
}

Tensor3 cyclic(const Tensor3& w) {
  Tensor3 out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) out(c, a, b) = w(a, b, c);
  return out;
}

bool is_superpotential(const Tensor3& w) { return cyclic(w) == w; }

Tensor3 apply_slots(const Tensor3& w, const LinMap& a, const LinMap& b, const LinMap& c) {
  // One slot at a time: 3 * 81 products instead of 729.
  const ExactMatrix* maps[3] = {&a.matrix(), &b.matrix(), &c.matrix()};
  Tensor3 cur = w;
  for (int slot = 0; slot < 3; ++slot) {
    const ExactMatrix& m = *maps[slot];
    Tensor3 next;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const FieldElement& v = cur(i, j, k);
          if (v.is_zero()) continue;
          int idx[3] = {i, j, k};
          const int src = idx[slot];
          for (int r = 0; r < 3; ++r) {
            const FieldElement& f = m(r, src);
            if (f.is_zero()) continue;
            idx[slot] = r;
            next(idx[0], idx[1], idx[2]) += f * v;
          }
        }
    cur = std::move(next);
  }
  return cur;
}

std::optional<LinMap> tsp_witness(const Tensor3& w) {
  ExactMatrix lefts(9, 3);
  for (int i = 0; i < 3; ++i) {
    const Tensor2 d = left_deriv(w, i);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) lefts(3 * j + k, i) = d(j, k);
  }
  if (exactfield::rank(lefts) != 3) throw DependentDerivatives();
  ExactMatrix q(3, 3);
  for (int i = 0; i < 3; ++i) {
    ExactMatrix aug(9, 4);
    const Tensor2 r = right_deriv(w, i);
    for (int row = 0; row < 9; ++row) {
      for (int col = 0; col < 3; ++col) aug(row, col) = lefts(row, col);
      aug(row, 3) = r(row / 3, row % 3);
    }
    const auto ech = exactfield::rref(aug);
    if (ech.pivots.size() != 3) return std::nullopt;  // right derivative outside the span
    for (int col = 0; col < 3; ++col) q(i, col) = ech.reduced(col, 3);
  }
  LinMap out(std::move(q));
  if (!out.invertible()) return std::nullopt;
  return out;
}

Tensor3 ms_twist(const Tensor3& w, const LinMap& t) {
  if (!t.invertible()) throw SingularMap();
  return apply_slots(w, t * t, t, LinMap::identity());
}

std::optional<FieldElement> aut_scalar(const Tensor3& w, const LinMap& t) {
  if (!t.invertible()) throw SingularMap();
  if (w.is_zero()) throw InvalidArgument("the zero potential has no automorphism scalar");
  const Tensor3 image = apply_slots(w, t, t, t);
  std::size_t lead = 0;
  while (w.coefficients()[lead].is_zero()) ++lead;
  const FieldElement s = image.coefficients()[lead] / w.coefficients()[lead];
  if (s.is_zero() || image != s * w) return std::nullopt;
  return s;
}

Tensor3 sklyanin(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  constexpr int x = 0, y = 1, z = 2;
  Tensor3 w;
  for (auto [i, j, k] : {std::array{x, y, z}, {y, z, x}, {z, x, y}}) w(i, j, k) = a;
  for (auto [i, j, k] : {std::array{x, z, y}, {y, x, z}, {z, y, x}}) w(i, j, k) = b;
  for (int i = 0; i < 3; ++i) w(i, i, i) = c;
  return w;
}

Tensor3 sklyanin(const hesse::ProjPoint& p) { return sklyanin(p[0], p[1], p[2]); }

std::string monomial_name(int i, int j, int k) { return {kNames[i], kNames[j], kNames[k]}; }
std::string monomial_name(int i, int j) { return {kNames[i], kNames[j]}; }

std::vector<std::pair<std::string, FieldElement>> terms(const Tensor3& w) {
  std::vector<std::pair<std::string, FieldElement>> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!w(i, j, k).is_zero()) out.emplace_back(monomial_name(i, j, k), w(i, j, k));
  return out;
}

std::vector<std::pair<std::string, FieldElement>> terms(const Tensor2& r) {
  std::vector<std::pair<std::string, FieldElement>> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!r(i, j).is_zero()) out.emplace_back(monomial_name(i, j), r(i, j));
  return out;
}

std::string to_string(const Tensor3& w) { return join_terms(terms(w)); }
std::string to_string(const Tensor2& r) { return join_terms(terms(r)); }

}  // namespace typeec::tensor
