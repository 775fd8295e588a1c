#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "typeec/exactfield/field.hpp"

namespace typeec::exactfield {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix of field elements.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ExactMatrix transpose() const;
  Vector apply(std::span<const FieldElement> v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct EchelonForm {
  ExactMatrix reduced;              ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

EchelonForm rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// Basis of {v : m v = 0}; each vector has leading nonzero entry 1 and the
/// basis is in reduced echelon form. Empty when m has full column rank.
std::vector<Vector> nullspace(const ExactMatrix& m);

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
std::vector<Vector> canonical_span(const std::vector<Vector>& vectors, std::size_t dim);

/// Basis of span(a) ∩ span(b) in canonical form.
std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                    std::size_t dim);

/// Unique x with m x = b when m is square and invertible; throws otherwise.
Vector solve(const ExactMatrix& m, std::span<const FieldElement> b);
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace typeec::exactfield
