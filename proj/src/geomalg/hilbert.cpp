#include "typeec/geomalg/hilbert.hpp"

#include "typeec/errors.hpp"

namespace typeec::geomalg {

namespace {

std::size_t power_of_three(int n) {
  std::size_t p = 1;
  for (int k = 0; k < n; ++k) p *= 3;
  return p;
}

}  // namespace

std::vector<std::size_t> hilbert_dims(const RelationSpace& rel, int nmax) {
  if (nmax < 0 || nmax > 5) throw InvalidArgument("hilbert_dims supports degrees 0 to 5");
  std::vector<std::size_t> dims;
  for (int n = 0; n <= nmax; ++n) {
    const std::size_t full = power_of_three(n);
    if (n < 2 || rel.dimension() == 0) {
      dims.push_back(full);
      continue;
    }
    // Rows span V^a (x) R (x) V^b with a + b = n - 2.
    std::vector<exactfield::Vector> rows;
    for (int a = 0; a <= n - 2; ++a) {
      const std::size_t tail = power_of_three(n - 2 - a);
      for (std::size_t u = 0; u < power_of_three(a); ++u)
        for (const auto& f : rel.basis())
          for (std::size_t v = 0; v < tail; ++v) {
            exactfield::Vector row(full);
            for (int j = 0; j < 3; ++j)
              for (int k = 0; k < 3; ++k)
                row[(u * 9 + 3 * j + k) * tail + v] = f(j, k);
            rows.push_back(std::move(row));
          }
    }
    dims.push_back(full - exactfield::rank(exactfield::ExactMatrix::from_rows(rows, full)));
  }
  return dims;
}

}  // namespace typeec::geomalg
