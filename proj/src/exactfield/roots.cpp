#include "typeec/exactfield/roots.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "typeec/errors.hpp"

namespace typeec::exactfield {

namespace {

bool all_rational(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_rational(); });
}

std::vector<mpz_class> small_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > 1000000) return out;
  unsigned long v = n.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.emplace_back(d);
    if (d * d != v) out.emplace_back(v / d);
  }
  return out;
}

std::vector<FieldElement> rational_candidates(const UPoly& p) {
  // Clear denominators, then apply the rational root theorem.
  mpz_class lcm_den = 1;
  for (const auto& c : p) {
    const mpz_class den = c.as_rational().denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : p) {
    mpq_class v = c.as_rational().value() * lcm_den;
    ints.push_back(v.get_num());
  }
  std::vector<FieldElement> out{FieldElement(0)};
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low >= ints.size()) return out;
  for (const auto& num : small_divisors(ints[low]))
    for (const auto& den : small_divisors(ints.back())) {
      out.emplace_back(Rational(num, den));
      out.emplace_back(Rational(mpz_class(-num), den));
    }
  return out;
}

std::vector<FieldElement> generator_monomials(const Tower& tower) {
  std::vector<FieldElement> monomials{FieldElement(1)};
  if (!tower) return monomials;
  for (const TowerLevel* level : tower->chain()) {
    Tower handle;
    for (Tower t = tower; t; t = t->base()) {
      if (t.get() == level) handle = t;
    }
    const FieldElement g = FieldElement::generator(handle);
    std::vector<FieldElement> next;
    for (const auto& m : monomials) {
      FieldElement power(1);
      for (std::size_t k = 0; k < level->degree(); ++k) {
        next.push_back(m * power);
        power *= g;
      }
    }
    monomials = std::move(next);
  }
  return monomials;
}

// N = k^2 * m with m free of small square factors.
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
  mpz_class k = 1;
  int sign = sgn(n);
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    mpz_class sq = p * p;
    while (n % sq == 0) {
      n /= sq;
      k *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) && n > 1) {
    mpz_class r = sqrt(n);
    k *= r;
    n = 1;
  }
  return {k, sign * n};
}

std::string fresh_name(const Tower& tower, const std::string& hint) {
  auto used = [&](const std::string& name) {
    for (const TowerLevel* l = tower.get(); l; l = l->base().get())
      if (l->name() == name) return true;
    return false;
  };
  if (!used(hint) && !hint.empty() && std::isdigit(static_cast<unsigned char>(hint.back()))) return hint;
  for (int k = 1;; ++k) {
    std::string name = hint + std::to_string(k);
    if (!used(name)) return name;
  }
}

UPoly deflate(const UPoly& p, const FieldElement& root) {
  auto [q, r] = upoly::divmod(p, UPoly{-root, FieldElement(1)});
  if (!r.empty()) throw InvalidArgument("deflation by a non-root");
  return q;
}

}  // namespace

std::vector<FieldElement> trial_roots(const UPoly& input, const Tower& tower) {
  UPoly p = input;
  upoly::trim(p);
  if (upoly::degree(p) <= 0) return {};
  std::set<FieldElement> found;
  auto test = [&](const FieldElement& x) {
    if (!found.count(x) && upoly::eval(p, x).is_zero()) found.insert(x);
  };
  const std::size_t wanted = static_cast<std::size_t>(upoly::degree(p));
  if (all_rational(p)) {
    for (const auto& x : rational_candidates(p)) test(x);
  }
  static const std::vector<Rational> kSmall{1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
  if (found.size() < wanted) {
    const auto monomials = generator_monomials(tower);
    for (const auto& m : monomials) {
      for (const auto& s : kSmall) test(FieldElement(s) * m);
      if (found.size() >= wanted) break;
    }
    if (found.size() < wanted) {
      for (const auto& m : monomials) {
        if (m.is_one()) continue;
        for (const auto& r : kSmall)
          for (const auto& s : kSmall) test(FieldElement(r) + FieldElement(s) * m);
        if (found.size() >= wanted) break;
      }
    }
  }
  return {found.begin(), found.end()};
}

Splitting split(const UPoly& input, const Tower& tower, const std::string& hint) {
  UPoly p = input;
  upoly::trim(p);
  const int d = upoly::degree(p);
  if (d < 1 || d > 3) throw InvalidArgument("split handles degrees 1 to 3");
  p = upoly::monic(p);

  Splitting out{tower, {}};
  // Trial roots first, each removed with its multiplicity.
  for (const auto& r : trial_roots(p, out.tower)) {
    while (upoly::degree(p) > 0 && upoly::eval(p, r).is_zero()) {
      out.roots.push_back(r);
      p = deflate(p, r);
    }
  }
  if (upoly::degree(p) == 3) {
    out.tower = TowerLevel::adjoin(out.tower, p, fresh_name(out.tower, hint));
    const FieldElement t = FieldElement::generator(out.tower);
    out.roots.push_back(t);
    p = deflate(p, t);
    for (const auto& r : trial_roots(p, out.tower)) {
      while (upoly::degree(p) > 0 && upoly::eval(p, r).is_zero()) {
        out.roots.push_back(r);
        p = deflate(p, r);
      }
    }
  }
  if (upoly::degree(p) == 2) {
    const FieldElement& b = p[1];
    const FieldElement disc = b * b - FieldElement(4) * p[0];
    std::optional<FieldElement> root;
    if (disc.is_rational()) {
      const Rational q = disc.as_rational();
      const mpz_class den = q.denominator();
      auto [k, m] = split_square(q.numerator() * den);
      if (m == 1) {
        root = FieldElement(Rational(k, den));
      } else if (auto s = trial_roots({FieldElement(Rational(-m, 1)), 0, 1}, out.tower); !s.empty()) {
        root = FieldElement(Rational(k, den)) * s.front();
      } else {
        const std::string name = m > 0 ? "sqrt" + m.get_str() : "sqrtm" + mpz_class(-m).get_str();
        out.tower = TowerLevel::adjoin(out.tower, {FieldElement(Rational(-m, 1)), 0, 1},
                                       fresh_name(out.tower, name));
        root = FieldElement(Rational(k, den)) * FieldElement::generator(out.tower);
      }
    } else if (auto s = trial_roots({-disc, 0, 1}, out.tower); !s.empty()) {
      root = s.front();
    } else {
      out.tower = TowerLevel::adjoin(out.tower, {-disc, 0, 1}, fresh_name(out.tower, hint));
      root = FieldElement::generator(out.tower);
    }
    out.roots.push_back((-b + *root) / FieldElement(2));
    out.roots.push_back((-b - *root) / FieldElement(2));
    p = {FieldElement(1)};
  }
  if (upoly::degree(p) == 1) out.roots.push_back(-p[0]);
  return out;
}

}  // namespace typeec::exactfield
