#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/exactpoly/poly.hpp"

using namespace shellbound;

namespace {

BigInt factorial(unsigned long n) {
  BigInt f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Exact integral of p(u) (1 - u^2)^w over [-1, 1] for integer w >= 0.
Rational weighted_integral(const Poly& p, int w) {
  Poly weight = Poly::constant(1);
  for (int i = 0; i < w; ++i) weight = weight * Poly({1, 0, -1});
  const Poly f = p * weight;
  Rational total = 0;
  for (std::size_t d = 0; d < f.coeffs().size(); d += 2) total += f.coeffs()[d] * Rational(2, d + 1);
  return total;
}

}  // namespace

TEST_CASE("binom matches factorial evaluation") {
  CHECK(binom(10, 3) == 120);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(30, 7) == factorial(30) / (factorial(7) * factorial(23)));
  CHECK(binom(30, 7) == 2035800);
  CHECK(binom(3, 5) == 0);
}

TEST_CASE("harm_dim") {
  CHECK(harm_dim(8, 0) == 1);
  CHECK(harm_dim(8, 1) == 8);
  CHECK(harm_dim(8, 3) == 112);
  CHECK(harm_dim(2, 7) == 2);
  CHECK_THROWS_AS(harm_dim(1, 2), PreconditionError);
}

TEST_CASE("gegenbauer_Q low degrees") {
  CHECK(gegenbauer_Q(8, 0) == Poly::constant(1));
  CHECK(gegenbauer_Q(5, 0) == Poly::constant(1));
  CHECK(gegenbauer_Q(8, 1)(q(1, 2)) == 4);
  CHECK(gegenbauer_Q(8, 1) == Poly::monomial(8, 1));
  CHECK(gegenbauer_Q(8, 3)(q(1, 2)) == -4);
  // 6 Q_3 = n(n+4)((n+2)u^3 - 3u) and 120 Q_5 = n(n+2)(n+8)((n+4)(n+6)u^5 - 10(n+4)u^3 + 15u)
  for (int n = 2; n <= 16; ++n) {
    const Rational r(n);
    CHECK(gegenbauer_Q(n, 3) == Rational(r * (r + 4) / 6) * Poly({0, -3, 0, r + 2}));
    CHECK(gegenbauer_Q(n, 5) ==
          Rational(r * (r + 2) * (r + 8) / 120) * Poly({0, 15, 0, -10 * (r + 4), 0, (r + 4) * (r + 6)}));
  }
  CHECK_THROWS_AS(gegenbauer_Q(1, 2), PreconditionError);
}

TEST_CASE("n = 2 family is twice the Chebyshev polynomials") {
  // T_4 = 8u^4 - 8u^2 + 1
  CHECK(gegenbauer_Q(2, 4) == Poly({2, 0, -16, 0, 16}));
  CHECK(gegenbauer_Q(2, 1) == Poly({0, 2}));
}

TEST_CASE("gegenbauer normalization, parity and antipodal values") {
  for (int n = 2; n <= 16; ++n) {
    const auto family = gegenbauer_family(n, 12);
    for (int i = 0; i <= 12; ++i) {
      const Poly& p = family[static_cast<std::size_t>(i)];
      CHECK(p.degree() == static_cast<std::size_t>(i));
      CHECK(p(Rational(1)) == Rational(harm_dim(n, i)));
      const Rational sign = i % 2 == 0 ? 1 : -1;
      CHECK(p(Rational(-1)) == sign * Rational(harm_dim(n, i)));
      CHECK(p.reflected() == sign * p);
    }
  }
}

TEST_CASE("gegenbauer polynomials are orthogonal for the sphere weight (odd n)") {
  // Weight (1 - u^2)^{(n-3)/2} is polynomial when n is odd.
  for (int n : {3, 5, 7, 9}) {
    const auto family = gegenbauer_family(n, 7);
    for (int i = 0; i <= 7; ++i) {
      for (int j = i + 1; j <= 7; ++j) {
        CHECK(weighted_integral(family[i] * family[j], (n - 3) / 2) == 0);
      }
      CHECK(weighted_integral(family[i] * family[i], (n - 3) / 2) > 0);
    }
  }
}

TEST_CASE("cumulative_C") {
  CHECK(cumulative_C(8, 3)(Rational(1)) == 120);
  CHECK(cumulative_C(8, 0) == Poly::constant(1));
  CHECK(cumulative_C(8, 3) == Poly({0, -40, 0, 160}));
  for (int n = 2; n <= 16; ++n) {
    for (int m = 0; m <= 12; ++m) {
      CHECK(cumulative_C(n, m)(Rational(1)) == Rational(binom(n + m - 1, m)));
    }
  }
}

TEST_CASE("closed forms agree with the cumulative sums") {
  CHECK(closed_form_C(11, 1) == Poly::monomial(11, 1));
  CHECK(closed_form_C(8, 3) == cumulative_C(8, 3));
  CHECK(closed_form_C(24, 5)(q(1, 2)) == cumulative_C(24, 5)(q(1, 2)));
  for (int n = 2; n <= 16; ++n) {
    for (int m : {1, 3, 5}) CHECK(closed_form_C(n, m) == cumulative_C(n, m));
  }
  CHECK_THROWS_AS(closed_form_C(8, 2), PreconditionError);
  CHECK_THROWS_AS(closed_form_C(8, 7), PreconditionError);
}

TEST_CASE("fisher and shell bounds") {
  CHECK(fisher_bound(8, 7) == 240);
  CHECK(fisher_bound(24, 11) == 196560);
  CHECK(fisher_bound(5, 1) == 2);
  CHECK(fisher_bound(5, 0) == 1);
  CHECK(fisher_bound(3, 2) == binom(3, 1) + binom(2, 0));
  CHECK(rsd_bound(8, 2) == 240);
  CHECK(rsd_bound(24, 4) == 4071600);
  for (long k = 1; k <= 10; ++k) CHECK(rsd_bound(1, k) == 2);

  for (int n = 2; n <= 16; ++n) {
    for (long k = 1; k <= 6; ++k) {
      CHECK(fisher_bound(n, static_cast<int>(4 * k - 1)) == rsd_bound(n, k));
      CHECK(rsd_bound(n + 1, k) > rsd_bound(n, k));
      CHECK(rsd_bound(n, k + 1) > rsd_bound(n, k));
    }
  }
}

TEST_CASE("poly basics") {
  Poly zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK((Poly({1, 2}) - Poly({1, 2})).is_zero());
  CHECK((Poly({1, 1}) * Poly({-1, 1})) == Poly({-1, 0, 1}));
  CHECK(Poly({0, 0, 0}).is_zero());
  CHECK(Poly({q(1, 2), 0, 3})(Rational(2)) == q(25, 2));
  CHECK(to_fraction_string(q(-6, 4)) == "-3/2");
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}
