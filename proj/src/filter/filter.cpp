#include "shellbound/filter/filter.hpp"

#include <string>

#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/parallel.hpp"

namespace shellbound {

FilterReport root_filter_check(int n, long k) {
  if (n < 2) throw PreconditionError("filter needs n >= 2");
  if (k < 1) throw PreconditionError("filter needs k >= 1");
  const Poly c = cumulative_C(n, static_cast<int>(2 * k - 1));
  if (!c.is_odd() || c.degree() != static_cast<std::size_t>(2 * k - 1)) {
    throw std::logic_error("C_{2k-1} is not odd of degree 2k-1");
  }
  FilterReport r;
  r.n = n;
  r.k = k;
  r.passes = true;
  for (long j = 0; j < k; ++j) {
    const Rational u = make_rational(j, k);
    Rational value = c(u);
    if (value != 0) r.passes = false;
    r.evaluations.emplace(u, std::move(value));
  }
  return r;
}

std::vector<int> filter_search(long k, int n_max, unsigned threads) {
  if (n_max < 2) return {};
  const auto count = static_cast<std::size_t>(n_max - 1);
  std::vector<char> pass(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    pass[i] = root_filter_check(static_cast<int>(i) + 2, k).passes ? 1 : 0;
  });
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (pass[i]) out.push_back(static_cast<int>(i) + 2);
  }
  return out;
}

int k2_solve() {
  // C_3 = (n(n+2)/6) u ((n+4) u^2 - 3): nonzero roots satisfy u^2 = 3/(n+4).
  const Rational root = make_rational(1, 2);
  const Rational n = Rational(3 / (root * root)) - 4;
  if (n.get_den() != 1) throw std::logic_error("k = 2 filter has no integral solution");
  return static_cast<int>(n.get_num().get_si());
}

K3Contradiction k3_contradiction() {
  // Quartic factor in v = u^2: (n+6)(n+8) v^2 - 10(n+6) v + 15, with
  // root sum 10/(n+8) and root product 15/((n+6)(n+8)).
  const Rational v1 = make_rational(1, 9);
  const Rational v2 = make_rational(4, 9);
  const Rational required_sum = v1 + v2;
  const Rational n = Rational(10 / required_sum) - 8;
  if (n.get_den() != 1) throw std::logic_error("k = 3 root sum forces a non-integral dimension");

  K3Contradiction r;
  r.n_from_sum = static_cast<int>(n.get_num().get_si());
  r.product_required = v1 * v2;

  // Read the product off the actual polynomial C_5^{(n)} = u (a v^2 + b v + c).
  const Poly c5 = cumulative_C(r.n_from_sum, 5);
  const Rational a = c5.coeff(5);
  const Rational b = c5.coeff(3);
  const Rational c = c5.coeff(1);
  if (Rational(-b / a) != required_sum) throw std::logic_error("root sum of C_5 does not match at the forced n");
  r.product_actual = c / a;
  r.consistent = r.product_actual == r.product_required;
  return r;
}

bool circle_exclusion(long k) {
  if (k < 2) throw PreconditionError("circle exclusion needs k >= 2");
  // 9 < pi^2 < 987/100 (pi > 3, pi < 3.1417).
  const Rational pi_sq_upper = make_rational(987, 100);
  const Rational pi_sq_lower = 9;
  const Rational kk = Rational(k) * Rational(k);
  // x = pi/(2k); cos x > 1 - x^2/2 > 1 - pi_sq_upper / (8k^2).
  const Rational cos_lower = 1 - pi_sq_upper / (8 * kk);
  const Rational threshold = make_rational(k - 1, k);
  const bool above = cos_lower > threshold;
  // cos x <= 1 - x^2/2 + x^4/24 < 1 whenever 0 < x^2 < 12.
  const Rational x_sq_lower = pi_sq_lower / (4 * kk);
  const Rational x_sq_upper = pi_sq_upper / (4 * kk);
  const bool below = x_sq_lower > 0 && x_sq_upper < 12;
  return above && below;
}

const std::set<int>& bd_allowed_strengths() {
  static const std::set<int> strengths = {4, 5, 7, 11};
  return strengths;
}

}  // namespace shellbound
