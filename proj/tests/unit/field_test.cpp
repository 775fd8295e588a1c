#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "printers.hpp"
#include "typeec/errors.hpp"
#include "typeec/exactfield/default_tower.hpp"
#include "typeec/exactfield/field.hpp"

using namespace typeec::exactfield;

TEST_CASE("default tower relations") {
  const auto& dt = default_tower();
  CHECK(dt.eps * dt.eps * dt.eps == FieldElement(1));
  CHECK(dt.eps == dt.eta.pow(3));
  // eta^3 is a primitive cube root of unity.
  const auto e3 = dt.eta.pow(3);
  CHECK((e3 * e3 + e3 + FieldElement(1)).is_zero());
  CHECK(!e3.is_one());
  CHECK(dt.eta.pow(9).is_one());
  CHECK(dt.sqrt3 == dt.qrt3 * dt.qrt3);
  CHECK(dt.sqrt3 * dt.sqrt3 == FieldElement(3));
  CHECK(dt.cbrt2.pow(3) == FieldElement(2));
  CHECK(dt.top()->degree() * dt.qrt3_level->degree() * dt.eta_level->degree() == 72);
}

TEST_CASE("binomial cube of 1+sqrt3") {
  const auto& dt = default_tower();
  const FieldElement lambda = FieldElement(1) + dt.sqrt3;
  CHECK(lambda.pow(3) == FieldElement(10) + FieldElement(6) * dt.sqrt3);
}

TEST_CASE("elements live at their lowest level") {
  const auto& dt = default_tower();
  CHECK(dt.eps.level() == dt.eta_level.get());
  CHECK(dt.cbrt2.pow(3).is_rational());
  CHECK((dt.sqrt3 * dt.sqrt3).depth() == 0);
  CHECK((dt.cbrt2 - dt.cbrt2).is_zero());
}

TEST_CASE("adjoining sqrt2 over Q") {
  auto level = TowerLevel::adjoin(nullptr, {FieldElement(-2), FieldElement(0), FieldElement(1)}, "s");
  const auto t = FieldElement::generator(level);
  CHECK((FieldElement(1) + t) * (FieldElement(1) - t) == FieldElement(-1));
  CHECK(t.inverse() == t / FieldElement(2));
}

TEST_CASE("roots of t^3+2 over Q(eps)") {
  const auto& dt = default_tower();
  auto level = TowerLevel::adjoin(dt.eta_level, {FieldElement(2), FieldElement(0), FieldElement(0), FieldElement(1)}, "c");
  const auto t = FieldElement::generator(level);
  for (const auto& root : {t, t * dt.eps, t * dt.eps * dt.eps}) {
    CHECK((root.pow(3) + FieldElement(2)).is_zero());
  }
  CHECK(t != t * dt.eps);
}

TEST_CASE("adjoining a square root of 6*sqrt3") {
  const auto& dt = default_tower();
  const FieldElement disc = FieldElement(6) * dt.sqrt3;
  auto level = TowerLevel::adjoin(dt.qrt3_level, {-disc, FieldElement(0), FieldElement(1)}, "r");
  const auto r = FieldElement::generator(level);
  CHECK(r * r == disc);
}

TEST_CASE("reducible adjunction surfaces a zero divisor") {
  auto level = TowerLevel::adjoin(nullptr, {FieldElement(-1), FieldElement(0), FieldElement(1)}, "u");
  const auto t = FieldElement::generator(level);
  const FieldElement f = t - FieldElement(1);
  CHECK(!f.is_zero());
  CHECK_THROWS_AS(f.inverse(), typeec::ZeroDivisor);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(FieldElement(1) / FieldElement(0), typeec::DivisionByZero);
  CHECK_THROWS_AS((default_tower().eta - default_tower().eta).inverse(), typeec::DivisionByZero);
}

TEST_CASE("adjoin validates its input") {
  CHECK_THROWS_AS(TowerLevel::adjoin(nullptr, {FieldElement(1), FieldElement(2)}, "a"), typeec::InvalidArgument);
  CHECK_THROWS_AS(TowerLevel::adjoin(nullptr, {FieldElement(1), FieldElement(0), FieldElement(2)}, "a"),
                  typeec::InvalidArgument);
  CHECK_THROWS_AS(TowerLevel::adjoin(default_tower().top(), {FieldElement(3), FieldElement(0), FieldElement(1)}, "eta"),
                  typeec::InvalidArgument);
}

TEST_CASE("mixing unrelated towers is rejected") {
  auto a = TowerLevel::adjoin(nullptr, {FieldElement(-2), FieldElement(0), FieldElement(1)}, "a");
  auto b = TowerLevel::adjoin(nullptr, {FieldElement(-5), FieldElement(0), FieldElement(1)}, "b");
  CHECK_THROWS_AS(FieldElement::generator(a) + FieldElement::generator(b), typeec::TowerMismatch);
  CHECK(join(default_tower().eta_level, default_tower().top()) == default_tower().top());
}

TEST_CASE("field axioms on random default-tower elements") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = typeec::testing::random_element(rng);
    const auto b = typeec::testing::random_element(rng);
    const auto c = typeec::testing::random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(((a - b) - (a - b)).is_zero());
    CHECK(((a - b).is_zero()) == (a == b));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == FieldElement(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("ordering is a strict total order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = typeec::testing::random_element(rng);
    const auto b = typeec::testing::random_element(rng);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
  }
}
