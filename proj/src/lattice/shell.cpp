#include "shellbound/lattice/shell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shellbound/errors.hpp"
#include "shellbound/parallel.hpp"

namespace shellbound {

namespace {

constexpr long double kCoordinateLimit = 2147483647.0L;

LatticeVector negated(const LatticeVector& v) {
  LatticeVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](std::int64_t x) { return -x; });
  return out;
}

// Fincke-Pohst search of { x : x^T G x <= radius } driven by the
// decomposition x^T G x = sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2.
class ShellSearch {
 public:
  ShellSearch(const GramLattice& lattice, std::int64_t k, double slack) : lattice_(lattice), k_(k), n_(lattice.dim()) {
    std::vector<std::vector<long double>> r(n_, std::vector<long double>(n_, 0.0L));
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        long double s = lattice.entry(i, j).get_d();
        for (int p = 0; p < i; ++p) s -= r[p][i] * r[p][j];
        if (j == i) {
          if (s <= 0.0L) throw PreconditionError("Cholesky factorization failed (Gram not numerically positive definite)");
          r[i][i] = std::sqrt(s);
        } else {
          r[i][j] = s / r[i][i];
        }
      }
    }
    q_.resize(n_);
    mu_.assign(n_, std::vector<long double>(n_, 0.0L));
    for (int i = 0; i < n_; ++i) {
      q_[i] = r[i][i] * r[i][i];
      for (int j = i + 1; j < n_; ++j) mu_[i][j] = r[i][j] / r[i][i];
    }
    radius_ = static_cast<long double>(k) * (1.0L + static_cast<long double>(slack));
  }

  // Integer range of the top coordinate.
  std::pair<std::int64_t, std::int64_t> top_range() const { return range(n_ - 1, 0.0L, radius_); }

  void run_top(std::int64_t top, std::vector<LatticeVector>& out) const {
    LatticeVector x(n_, 0);
    x[n_ - 1] = top;
    const long double d = static_cast<long double>(top);
    const long double rem = radius_ - q_[n_ - 1] * d * d;
    if (rem < 0.0L) return;
    if (n_ == 1) {
      accept(x, out);
      return;
    }
    descend(n_ - 2, rem, x, out);
  }

 private:
  std::pair<std::int64_t, std::int64_t> range(int level, long double center, long double remaining) const {
    const long double half = std::sqrt(std::max(0.0L, remaining / q_[level]));
    const long double lo = std::ceil(center - half);
    const long double hi = std::floor(center + half);
    if (std::fabs(lo) > kCoordinateLimit || std::fabs(hi) > kCoordinateLimit) {
      throw PreconditionError("shell coordinates exceed 31 bits; basis too skewed for enumeration");
    }
    return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
  }

  void descend(int level, long double remaining, LatticeVector& x, std::vector<LatticeVector>& out) const {
    long double center = 0.0L;
    for (int j = level + 1; j < n_; ++j) center -= mu_[level][j] * static_cast<long double>(x[j]);
    const auto [lo, hi] = range(level, center, remaining);
    for (std::int64_t v = lo; v <= hi; ++v) {
      const long double d = static_cast<long double>(v) - center;
      const long double rem = remaining - q_[level] * d * d;
      if (rem < 0.0L) continue;
      x[level] = v;
      if (level == 0) {
        accept(x, out);
      } else {
        descend(level - 1, rem, x, out);
      }
    }
    x[level] = 0;
  }

  void accept(const LatticeVector& x, std::vector<LatticeVector>& out) const {
    if (exact_norm(lattice_, x) == k_) out.push_back(x);
  }

  const GramLattice& lattice_;
  std::int64_t k_;
  int n_;
  std::vector<long double> q_;
  std::vector<std::vector<long double>> mu_;
  long double radius_;
};

}  // namespace

BigInt exact_norm(const GramLattice& lattice, const LatticeVector& v) {
  const auto& small = lattice.small_gram();
  const std::size_t n = v.size();
  if (!small || static_cast<int>(n) != lattice.dim()) return norm(lattice, v);
  const bool small_coords = std::all_of(v.begin(), v.end(), [](std::int64_t x) {
    return x >= -static_cast<std::int64_t>(kCoordinateLimit) && x <= static_cast<std::int64_t>(kCoordinateLimit);
  });
  if (!small_coords) return norm(lattice, v);
  // |g| < 2^31 and |x| < 2^31: each term < 2^93, the sum of n^2 terms stays
  // far below 2^127 for any practical n.
  __int128 acc = 0;
  const auto* g = small->data();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(g[i * n + j]) * v[j];
    acc += row * v[i];
  }
  const auto lo = static_cast<std::int64_t>(acc);
  if (static_cast<__int128>(lo) == acc) return from_int64(lo);
  return norm(lattice, v);
}

Shell::Shell(GramLattice lattice, std::int64_t k, std::vector<LatticeVector> vectors)
    : lattice_(std::move(lattice)), k_(k), vectors_(std::move(vectors)) {
  if (k_ < 1) throw PreconditionError("shell norm must be >= 1");
  std::sort(vectors_.begin(), vectors_.end());
  if (std::adjacent_find(vectors_.begin(), vectors_.end()) != vectors_.end()) {
    throw PreconditionError("shell contains duplicate vectors");
  }
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != lattice_.dim()) throw InputError("shell vector has wrong dimension");
    if (exact_norm(lattice_, v) != k_) throw PreconditionError("shell vector has the wrong norm");
    if (!contains(negated(v))) throw PreconditionError("shell is not closed under negation");
  }
}

bool Shell::contains(const LatticeVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

Shell enumerate_shell(const GramLattice& lattice, std::int64_t k, const EnumerateOptions& options) {
  if (k < 1) throw PreconditionError("shell norm must be >= 1, got " + std::to_string(k));
  const ShellSearch search(lattice, k, options.radius_slack);
  const auto [lo, hi] = search.top_range();
  const std::size_t tasks = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<std::vector<LatticeVector>> found(tasks);
  parallel_for(tasks, options.threads,
               [&](std::size_t t) { search.run_top(lo + static_cast<std::int64_t>(t), found[t]); });
  std::vector<LatticeVector> all;
  for (auto& part : found) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return Shell(lattice, k, std::move(all));
}

std::size_t shell_count(const GramLattice& lattice, std::int64_t k, const EnumerateOptions& options) {
  return enumerate_shell(lattice, k, options).size();
}

std::optional<std::int64_t> minimum(const GramLattice& lattice, std::int64_t k_max, const EnumerateOptions& options) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (shell_count(lattice, k, options) > 0) return k;
  }
  return std::nullopt;
}

}  // namespace shellbound
