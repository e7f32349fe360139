#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "shellbound/exactpoly/poly.hpp"
#include "shellbound/exactpoly/rational.hpp"
#include "shellbound/kernels/dot_histogram.hpp"
#include "shellbound/lattice/shell.hpp"

namespace shellbound {

// Inner-product set A(X) of the normalized shell: values <y,z>/k over
// distinct shell vectors, sorted ascending.
struct Spectrum {
  std::int64_t k = 0;
  std::vector<Rational> values;
};

// Ordered pairs (x, y), x != y, of the normalized shell bucketed by <x,y>/k.
struct PairDistribution {
  std::int64_t k = 0;
  std::uint64_t size = 0;
  std::map<Rational, std::uint64_t> counts;
};

struct DesignReport {
  int strength = 0;
  bool tight = false;
  BigInt fisher;
  std::uint64_t size = 0;
  // true when every degree up to t_max vanished, i.e. strength >= t_max.
  bool capped = false;
};

struct PairOptions {
  unsigned threads = 0;
  std::optional<kernels::Isa> isa;
};

PairDistribution pair_distribution(const Shell& shell, const PairOptions& options = {});

Spectrum spectrum(const PairDistribution& dist);
Spectrum spectrum(const Shell& shell, const PairOptions& options = {});

// sum over all ordered (x, y) in X^2 of Q_i(<x, y>), diagonal included.
Rational moment_sum(int n, int i, const PairDistribution& dist);

// Largest t <= t_max with vanishing moments in degrees 1..t.
DesignReport design_strength(int n, const PairDistribution& dist, int t_max);
DesignReport design_strength(const Shell& shell, int t_max, const PairOptions& options = {});
inline int default_t_max(std::int64_t k) { return static_cast<int>(4 * k + 3); }

// 2 binom(n + s - 2, s - 1)
BigInt dgs_bound_with_s(int n, long s);

// prod_{a in A} (u - a) / (1 - a)
Poly annihilator_F(const Spectrum& sp);

// rsd_bound(n, k) F_X(u) == (1 + u) C_{2k-1}(u) as polynomials.
bool annihilator_identity_holds(int n, const Spectrum& sp);
bool verify_annihilator_identity(const GramLattice& lattice, std::int64_t k, const PairOptions& options = {});

// {-1} union {j/k : |j| < k}
std::vector<Rational> full_shell_spectrum(std::int64_t k);

}  // namespace shellbound
