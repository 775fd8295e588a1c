#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "typeec/errors.hpp"
#include "typeec/exactfield/matrix.hpp"

using namespace typeec::exactfield;

TEST_CASE("nullspace of the identity is empty") { CHECK(nullspace(ExactMatrix::identity(3)).empty()); }

TEST_CASE("nullspace of a zero matrix is everything") {
  const auto basis = nullspace(ExactMatrix(2, 3));
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(basis[i][j] == FieldElement(i == j ? 1 : 0));
}

TEST_CASE("nullspace vectors are normalized and annihilated") {
  const auto& dt = default_tower();
  ExactMatrix m = ExactMatrix::from_rows(
      {{FieldElement(2), dt.eta, FieldElement(0), dt.sqrt3},
       {FieldElement(4), dt.eta * FieldElement(2), FieldElement(0), dt.sqrt3 * FieldElement(2)},
       {FieldElement(0), FieldElement(1), dt.cbrt2, FieldElement(0)}},
      4);
  const auto basis = nullspace(m);
  CHECK(rank(m) + basis.size() == 4);
  for (const auto& v : basis) {
    for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    CHECK(v[lead].is_one());
  }
}

TEST_CASE("rank plus nullity on random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = typeec::testing::random_element(rng, 2);
    if (rows > 1) {
      // Force a dependency now and then.
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * default_tower().eps;
    }
    const auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const auto& v : basis)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("inverse and solve") {
  const auto& dt = default_tower();
  ExactMatrix m = ExactMatrix::from_rows(
      {{dt.eps * dt.eps, dt.eps, FieldElement(1)}, {dt.eps, dt.eps * dt.eps, FieldElement(1)},
       {FieldElement(1), FieldElement(1), FieldElement(1)}},
      3);
  const ExactMatrix inv = inverse(m);
  CHECK(m * inv == ExactMatrix::identity(3));
  const Vector b{FieldElement(1), dt.sqrt3, FieldElement(0)};
  const Vector x = solve(m, b);
  CHECK(m.apply(x) == b);
  CHECK_THROWS_AS(inverse(ExactMatrix(2, 2)), typeec::SingularMap);
}

TEST_CASE("span intersection") {
  const Vector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  const Vector d{1, 1, 0};
  const auto common = intersect_spans({e1, e2}, {d, e3}, 3);
  REQUIRE(common.size() == 1);
  CHECK(common[0] == d);
  CHECK(canonical_span({d, e1}, 3) == canonical_span({e1, e2}, 3));
}
