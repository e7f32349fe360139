#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "shellbound/lattice/gram_lattice.hpp"

namespace shellbound {

// The norm-k shell S_k(L): every lattice vector of squared norm exactly k,
// sorted lexicographically by coordinates. Construction re-verifies the
// invariants (exact norms, no duplicates, closed under negation).
class Shell {
 public:
  Shell(GramLattice lattice, std::int64_t k, std::vector<LatticeVector> vectors);

  const GramLattice& lattice() const { return lattice_; }
  int dim() const { return lattice_.dim(); }
  std::int64_t k() const { return k_; }
  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  bool contains(const LatticeVector& v) const;

 private:
  GramLattice lattice_;
  std::int64_t k_;
  std::vector<LatticeVector> vectors_;
};

struct EnumerateOptions {
  unsigned threads = 0;
  // Multiplicative slack on the pruning radius of the floating-point
  // Cholesky search; membership is decided exactly afterwards.
  double radius_slack = 1e-6;
};

Shell enumerate_shell(const GramLattice& lattice, std::int64_t k, const EnumerateOptions& options = {});
std::size_t shell_count(const GramLattice& lattice, std::int64_t k, const EnumerateOptions& options = {});

// Smallest k <= k_max with a nonempty shell.
std::optional<std::int64_t> minimum(const GramLattice& lattice, std::int64_t k_max,
                                    const EnumerateOptions& options = {});

// Exact v^T G v, using 128-bit arithmetic when the Gram entries allow it.
BigInt exact_norm(const GramLattice& lattice, const LatticeVector& v);

}  // namespace shellbound
