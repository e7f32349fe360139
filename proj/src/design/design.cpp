#include "shellbound/design/design.hpp"

#include <algorithm>
#include <string>

#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"

namespace shellbound {

namespace {

// Antipodal representatives: first nonzero coordinate positive.
bool is_representative(const LatticeVector& v) {
  for (auto x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

kernels::DotOperands representative_operands(const Shell& shell) {
  const auto& lattice = shell.lattice();
  const auto n = static_cast<std::size_t>(shell.dim());
  kernels::DotOperands ops;
  ops.dim = n;
  BigInt acc;
  for (const auto& v : shell.vectors()) {
    if (!is_representative(v)) continue;
    ++ops.count;
    ops.left.insert(ops.left.end(), v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i) {
      acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != 0) acc += lattice.entry(static_cast<int>(i), static_cast<int>(j)) * from_int64(v[j]);
      }
      if (!fits_int64(acc)) throw PreconditionError("G * v exceeds 64 bits; shell too large for the pair kernel");
      ops.right.push_back(acc.get_si());
    }
  }
  return ops;
}

}  // namespace

PairDistribution pair_distribution(const Shell& shell, const PairOptions& options) {
  if (shell.empty()) throw PreconditionError("pair distribution of an empty shell");
  const std::int64_t k = shell.k();
  const auto ops = representative_operands(shell);
  if (2 * ops.count != shell.size()) throw PreconditionError("shell is not antipodal");

  const auto hist = kernels::upper_abs_dot_histogram(ops, static_cast<std::size_t>(k) + 1,
                                                     kernels::HistogramOptions{options.threads, options.isa});
  // Two distinct representatives can only have |<a,b>| = k if b = +-a.
  if (hist[static_cast<std::size_t>(k)] != 0) throw std::logic_error("distinct representatives with |<a,b>| = k");

  PairDistribution d;
  d.k = k;
  d.size = shell.size();
  d.counts[Rational(-1)] = d.size;
  // Each unordered representative pair {a, b} with <a,b> = v gives the eight
  // ordered pairs among {+-a} x {+-b} in both orders: four at v and four at -v.
  if (hist[0] != 0) d.counts[Rational(0)] = 8 * hist[0];
  for (std::int64_t j = 1; j < k; ++j) {
    const std::uint64_t c = hist[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    d.counts[make_rational(j, k)] += 4 * c;
    d.counts[make_rational(-j, k)] += 4 * c;
  }
  return d;
}

Spectrum spectrum(const PairDistribution& dist) {
  Spectrum sp;
  sp.k = dist.k;
  for (const auto& [value, count] : dist.counts) {
    if (count != 0) sp.values.push_back(value);
  }
  return sp;
}

Spectrum spectrum(const Shell& shell, const PairOptions& options) { return spectrum(pair_distribution(shell, options)); }

Rational moment_sum(int n, int i, const PairDistribution& dist) {
  if (i < 1) throw PreconditionError("moment degree must be >= 1");
  const Poly q = gegenbauer_Q(n, i);
  Rational total = Rational(BigInt(static_cast<unsigned long>(dist.size))) * q(Rational(1));
  for (const auto& [value, count] : dist.counts) {
    total += Rational(BigInt(static_cast<unsigned long>(count))) * q(value);
  }
  return total;
}

DesignReport design_strength(int n, const PairDistribution& dist, int t_max) {
  if (t_max < 1) throw PreconditionError("t_max must be >= 1");
  const auto family = gegenbauer_family(n, t_max);
  DesignReport r;
  r.size = dist.size;
  r.capped = true;
  r.strength = t_max;
  for (int i = 1; i <= t_max; ++i) {
    const Poly& q = family[static_cast<std::size_t>(i)];
    Rational total = Rational(BigInt(static_cast<unsigned long>(dist.size))) * q(Rational(1));
    for (const auto& [value, count] : dist.counts) total += Rational(BigInt(static_cast<unsigned long>(count))) * q(value);
    if (total != 0) {
      r.strength = i - 1;
      r.capped = false;
      break;
    }
  }
  r.fisher = fisher_bound(n, r.strength);
  r.tight = BigInt(static_cast<unsigned long>(r.size)) == r.fisher;
  return r;
}

DesignReport design_strength(const Shell& shell, int t_max, const PairOptions& options) {
  return design_strength(shell.dim(), pair_distribution(shell, options), t_max);
}

BigInt dgs_bound_with_s(int n, long s) {
  if (n < 2) throw PreconditionError("dimension must be >= 2");
  if (s < 1) throw PreconditionError("inner-product count must be >= 1");
  const auto un = static_cast<unsigned long>(n);
  const auto us = static_cast<unsigned long>(s);
  return 2 * binom(un + us - 2, us - 1);
}

Poly annihilator_F(const Spectrum& sp) {
  Poly f = Poly::constant(1);
  for (const auto& a : sp.values) {
    if (a == 1) throw PreconditionError("inner-product set contains 1");
    const Rational inv = 1 / Rational(1 - a);
    f = f * Poly::linear(Rational(-a * inv), inv);
  }
  return f;
}

bool annihilator_identity_holds(int n, const Spectrum& sp) {
  const Poly lhs = Rational(rsd_bound(n, static_cast<long>(sp.k))) * annihilator_F(sp);
  const Poly rhs = Poly::linear(1, 1) * cumulative_C(n, static_cast<int>(2 * sp.k - 1));
  return lhs == rhs;
}

bool verify_annihilator_identity(const GramLattice& lattice, std::int64_t k, const PairOptions& options) {
  const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{options.threads});
  if (shell.empty()) throw PreconditionError("annihilator identity needs a nonempty shell");
  return annihilator_identity_holds(lattice.dim(), spectrum(shell, options));
}

std::vector<Rational> full_shell_spectrum(std::int64_t k) {
  std::vector<Rational> v;
  v.push_back(Rational(-1));
  for (std::int64_t j = -(k - 1); j <= k - 1; ++j) v.push_back(make_rational(j, k));
  return v;
}

}  // namespace shellbound
