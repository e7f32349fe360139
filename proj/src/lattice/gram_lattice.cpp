#include "shellbound/lattice/gram_lattice.hpp"

#include <cstdlib>
#include <utility>

#include "shellbound/errors.hpp"

namespace shellbound {

namespace {

constexpr long kSmallEntryLimit = (1L << 31) - 1;

void require_dim(const GramLattice& lattice, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != lattice.dim()) {
    throw InputError("vector of length " + std::to_string(v.size()) + " in a lattice of dimension " +
                     std::to_string(lattice.dim()));
  }
}

}  // namespace

GramLattice::GramLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw InputError("Gram matrix is empty");
  for (const auto& row : gram_) {
    if (row.size() != n) throw InputError("Gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw PreconditionError("Gram matrix is not symmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
      }
    }
  }
  const auto minors = leading_minors(gram_);
  if (minors.size() != n || minors.back() <= 0) {
    throw PreconditionError("Gram matrix is not positive definite (leading minor " +
                            std::to_string(minors.size()) + " is not positive)");
  }

  std::vector<std::int64_t> small(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& g = gram_[i][j];
      if (abs(g) > kSmallEntryLimit) return;
      small[i * n + j] = g.get_si();
    }
  }
  small_gram_ = std::move(small);
}

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    row.reserve(r.size());
    for (long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

BigInt inner(const GramLattice& lattice, const LatticeVector& v, const LatticeVector& w) {
  require_dim(lattice, v);
  require_dim(lattice, w);
  const int n = lattice.dim();
  BigInt acc = 0;
  BigInt row;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    row = 0;
    for (int j = 0; j < n; ++j) {
      if (w[j] != 0) row += lattice.entry(i, j) * from_int64(w[j]);
    }
    acc += from_int64(v[i]) * row;
  }
  return acc;
}

BigInt norm(const GramLattice& lattice, const LatticeVector& v) { return inner(lattice, v, v); }

std::vector<BigInt> leading_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return minors;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace shellbound
