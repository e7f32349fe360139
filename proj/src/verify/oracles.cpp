#include "shellbound/verify/oracles.hpp"

#include <algorithm>

#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"

namespace shellbound::oracle {

std::vector<std::vector<Rational>> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw PreconditionError("singular matrix");
    std::swap(a[c], a[p]);
    const Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

std::vector<std::int64_t> box_bounds(const GramLattice& lattice, std::int64_t k) {
  const auto inv = inverse(lattice.gram());
  std::vector<std::int64_t> bounds;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    // largest b with b^2 <= k * inv_ii
    const Rational limit = Rational(k) * inv[i][i];
    BigInt whole;
    mpz_fdiv_q(whole.get_mpz_t(), limit.get_num_mpz_t(), limit.get_den_mpz_t());
    BigInt b = sqrt(whole);
    while (Rational((b + 1) * (b + 1)) <= limit) ++b;
    while (b > 0 && Rational(b * b) > limit) --b;
    bounds.push_back(to_int64(b));
  }
  return bounds;
}

std::vector<LatticeVector> box_search(const GramLattice& lattice, std::int64_t k) {
  const auto bounds = box_bounds(lattice, k);
  const std::size_t n = bounds.size();
  std::vector<LatticeVector> out;
  LatticeVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bounds[i];
  const BigInt target(static_cast<long>(k));
  while (true) {
    if (norm(lattice, x) == target) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < bounds[i]) {
        ++x[i];
        break;
      }
      x[i] = -bounds[i];
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

Rational direct_moment_sum(const Shell& shell, int i) {
  const Poly q = gegenbauer_Q(shell.dim(), i);
  const Rational k(static_cast<long>(shell.k()));
  Rational total = 0;
  for (const auto& x : shell.vectors()) {
    for (const auto& y : shell.vectors()) total += q(Rational(Rational(inner(shell.lattice(), x, y)) / k));
  }
  return total;
}

}  // namespace shellbound::oracle
