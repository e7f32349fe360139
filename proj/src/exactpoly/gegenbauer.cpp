#include "shellbound/exactpoly/gegenbauer.hpp"

#include <string>

#include "shellbound/errors.hpp"

namespace shellbound {

namespace {

void require_dimension(int n) {
  if (n < 2) throw PreconditionError("dimension must be >= 2, got " + std::to_string(n));
}

Rational as_rational(long v) { return Rational(v); }

}  // namespace

BigInt binom(unsigned long a, unsigned long b) {
  BigInt out;
  if (b > a) return out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

BigInt harm_dim(int n, int i) {
  require_dimension(n);
  if (i < 0) throw PreconditionError("degree must be >= 0");
  const auto un = static_cast<unsigned long>(n);
  const auto ui = static_cast<unsigned long>(i);
  BigInt d = binom(un + ui - 1, ui);
  if (i >= 2) d -= binom(un + ui - 3, ui - 2);
  return d;
}

std::vector<Poly> gegenbauer_family(int n, int max_degree) {
  require_dimension(n);
  if (max_degree < 0) throw PreconditionError("degree must be >= 0");
  std::vector<Poly> q;
  q.reserve(static_cast<std::size_t>(max_degree) + 1);
  q.push_back(Poly::constant(1));
  if (max_degree == 0) return q;

  const Poly u = Poly::monomial(1, 1);
  if (n == 2) {
    // lambda = 0: Chebyshev T_i, scaled by harm_dim(2, i) = 2.
    Poly prev = Poly::constant(1);
    Poly cur = u;
    q.push_back(2 * cur);
    for (int i = 2; i <= max_degree; ++i) {
      Poly next = Rational(2) * (u * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
      q.push_back(Rational(2) * cur);
    }
    return q;
  }

  // Classical C_i^lambda with lambda = (n-2)/2:
  //   i C_i = 2(i + lambda - 1) u C_{i-1} - (i + 2 lambda - 2) C_{i-2}
  const Rational lambda = make_rational(n - 2, 2);
  Poly prev = Poly::constant(1);
  Poly cur = Rational(2 * lambda) * u;
  auto push_scaled = [&](const Poly& c, int i) {
    const Rational at_one = c(Rational(1));
    q.push_back(c * Rational(Rational(harm_dim(n, i)) / at_one));
  };
  push_scaled(cur, 1);
  for (int i = 2; i <= max_degree; ++i) {
    const Rational a = 2 * (as_rational(i) + lambda - 1) / i;
    const Rational b = (as_rational(i) + 2 * lambda - 2) / i;
    Poly next = a * (u * cur) - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
    push_scaled(cur, i);
  }
  return q;
}

Poly gegenbauer_Q(int n, int i) {
  if (i < 0) throw PreconditionError("degree must be >= 0");
  return gegenbauer_family(n, i).back();
}

Poly cumulative_C(int n, int m) {
  if (m < 0) throw PreconditionError("degree must be >= 0");
  const auto q = gegenbauer_family(n, m);
  Poly sum;
  for (int i = m; i >= 0; i -= 2) sum += q[static_cast<std::size_t>(i)];
  return sum;
}

Poly closed_form_C(int n, int m) {
  require_dimension(n);
  const Rational r(n);
  switch (m) {
    case 1:
      return Poly::monomial(r, 1);
    case 3: {
      const Rational scale = r * (r + 2) / 6;
      return scale * Poly({0, -3, 0, r + 4});
    }
    case 5: {
      const Rational scale = r * (r + 2) * (r + 4) / 120;
      return scale * Poly({0, 15, 0, -10 * (r + 6), 0, (r + 6) * (r + 8)});
    }
    default:
      throw PreconditionError("closed form available only for m in {1, 3, 5}, got " + std::to_string(m));
  }
}

BigInt fisher_bound(int n, int t) {
  require_dimension(n);
  if (t < 0) throw PreconditionError("strength must be >= 0");
  const auto un = static_cast<unsigned long>(n);
  const auto e = static_cast<unsigned long>(t / 2);
  if (t % 2 == 0) {
    BigInt b = binom(un + e - 1, e);
    if (e >= 1) b += binom(un + e - 2, e - 1);
    return b;
  }
  return 2 * binom(un + e - 1, e);
}

BigInt rsd_bound(int n, long k) {
  if (n < 1) throw PreconditionError("dimension must be >= 1");
  if (k < 1) throw PreconditionError("norm must be >= 1");
  const auto un = static_cast<unsigned long>(n);
  const auto uk = static_cast<unsigned long>(k);
  return 2 * binom(un + 2 * uk - 2, 2 * uk - 1);
}

}  // namespace shellbound
