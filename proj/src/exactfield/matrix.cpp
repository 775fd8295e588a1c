#include "typeec/exactfield/matrix.hpp"

#include <limits>

#include "typeec/errors.hpp"

namespace typeec::exactfield {

namespace {

// Rough size of an element; pivots with small weight keep fill-in cheap.
std::size_t weight(const FieldElement& x) {
  if (x.is_rational()) return x.is_one() ? 0 : 1;
  std::size_t w = 0;
  for (const auto& c : x.coefficients()) {
    if (!c.is_zero()) w += 2 + weight(c);
  }
  return w;
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector ExactMatrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw InvalidArgument("dimension mismatch in matrix-vector product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElement acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("dimension mismatch in matrix product");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  return out;
}

EchelonForm rref(const ExactMatrix& input) {
  ExactMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      std::size_t w = weight(m(i, c));
      if (w < best_weight) {
        best = i;
        best_weight = w;
        if (w == 0) break;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    const FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j).is_zero()) continue;
        m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  ExactMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const ExactMatrix& m) {
  const auto ech = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = FieldElement(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return canonical_span(basis, cols);
}

std::vector<Vector> canonical_span(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const auto ech = rref(ExactMatrix::from_rows(vectors, dim));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ech.reduced.rows(); ++i) {
    auto row = ech.reduced.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                    std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  ExactMatrix m(dim, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) m(k, i) = a[i][k];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = 0; k < dim; ++k) m(k, a.size() + j) = -b[j][k];
  std::vector<Vector> common;
  for (const auto& coeffs : nullspace(m)) {
    Vector v(dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t k = 0; k < dim; ++k) v[k] += coeffs[i] * a[i][k];
    }
    common.push_back(std::move(v));
  }
  return canonical_span(common, dim);
}

Vector solve(const ExactMatrix& m, std::span<const FieldElement> b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw InvalidArgument("solve expects a square system");
  ExactMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto ech = rref(aug);
  if (ech.pivots.size() != n || ech.pivots.back() != n - 1) throw SingularMap();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ech.reduced(i, n);
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse of a non-square matrix");
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement(1);
  }
  const auto ech = rref(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMap();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  return out;
}

}  // namespace typeec::exactfield
