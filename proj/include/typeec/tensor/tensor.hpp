#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "typeec/exactfield/matrix.hpp"
#include "typeec/hesse/point.hpp"

namespace typeec::tensor {

using exactfield::ExactMatrix;
using exactfield::FieldElement;
using exactfield::Vector;

/// Element of V (x) V for V = span{x, y, z}; coefficient (i, j) at 3i + j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::span<const FieldElement> coeffs);

  FieldElement& operator()(int i, int j) { return c_[3 * i + j]; }
  const FieldElement& operator()(int i, int j) const { return c_[3 * i + j]; }
  Vector as_vector() const { return {c_.begin(), c_.end()}; }
  bool is_zero() const;

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);
  friend Tensor2 operator*(const FieldElement& s, const Tensor2& a);
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::array<FieldElement, 9> c_;
};

/// Element of V (x) V (x) V; coefficient (i, j, k) at 9i + 3j + k with
/// x, y, z numbered 0, 1, 2.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::span<const FieldElement> coeffs);
  /// The basis tensor x_i x_j x_k.
  static Tensor3 monomial(int i, int j, int k);

  FieldElement& operator()(int i, int j, int k) { return c_[9 * i + 3 * j + k]; }
  const FieldElement& operator()(int i, int j, int k) const { return c_[9 * i + 3 * j + k]; }
  const std::array<FieldElement, 27>& coefficients() const { return c_; }
  bool is_zero() const;

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator*(const FieldElement& s, const Tensor3& a);
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::array<FieldElement, 27> c_;
};

/// Linear map on V sending x_j to sum_i m(i, j) x_i.
class LinMap {
 public:
  explicit LinMap(ExactMatrix m);
  static LinMap identity() { return LinMap(ExactMatrix::identity(3)); }

  const ExactMatrix& matrix() const { return m_; }
  bool invertible() const;
  LinMap inverse() const;  ///< throws SingularMap

  friend LinMap operator*(const LinMap& a, const LinMap& b) { return LinMap(a.m_ * b.m_); }
  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  ExactMatrix m_;
};

/// w = sum_i x_i (x) left_deriv(w, i).
Tensor2 left_deriv(const Tensor3& w, int i);
/// w = sum_i right_deriv(w, i) (x) x_i.
Tensor2 right_deriv(const Tensor3& w, int i);

/// v1 v2 v3 -> v3 v1 v2.
Tensor3 cyclic(const Tensor3& w);
bool is_superpotential(const Tensor3& w);

/// (a (x) b (x) c)(w).
Tensor3 apply_slots(const Tensor3& w, const LinMap& a, const LinMap& b, const LinMap& c);

/// The invertible Q with right derivatives = Q * left derivatives, if any.
/// Throws DependentDerivatives when the left derivatives are dependent.
std::optional<LinMap> tsp_witness(const Tensor3& w);

/// (t^2 (x) t (x) id)(w). Throws SingularMap for singular t.
Tensor3 ms_twist(const Tensor3& w, const LinMap& t);

/// The scalar s with (t (x) t (x) t)(w) = s w, if w is an eigenvector.
/// Throws SingularMap for singular t and InvalidArgument for w = 0.
std::optional<FieldElement> aut_scalar(const Tensor3& w, const LinMap& t);

/// a(xyz+yzx+zxy) + b(xzy+yxz+zyx) + c(x^3+y^3+z^3) for p = (a:b:c).
Tensor3 sklyanin(const hesse::ProjPoint& p);
Tensor3 sklyanin(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// "xyz" style name of a basis monomial.
std::string monomial_name(int i, int j, int k);
std::string monomial_name(int i, int j);

/// Nonzero terms sorted by monomial index.
std::vector<std::pair<std::string, FieldElement>> terms(const Tensor3& w);
std::vector<std::pair<std::string, FieldElement>> terms(const Tensor2& r);

/// Human-readable sum such as "x*y*z+eta*y*z*x".
std::string to_string(const Tensor3& w);
std::string to_string(const Tensor2& r);

}  // namespace typeec::tensor
