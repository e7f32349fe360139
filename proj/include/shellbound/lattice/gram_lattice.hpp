#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shellbound/exactpoly/rational.hpp"

namespace shellbound {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Coordinates of a lattice vector in the lattice basis.
using LatticeVector = std::vector<std::int64_t>;

// Integral lattice given by a symmetric positive definite integer Gram
// matrix. Construction validates symmetry and positive definiteness
// (all leading principal minors > 0) exactly.
class GramLattice {
 public:
  explicit GramLattice(IntMatrix gram, std::string name = {});

  int dim() const { return static_cast<int>(gram_.size()); }
  const IntMatrix& gram() const { return gram_; }
  const BigInt& entry(int i, int j) const { return gram_[i][j]; }
  const std::string& name() const { return name_; }

  // Row-major int64 copy of the Gram matrix when every entry fits in
  // 31 bits; enables overflow-free __int128 norm evaluation.
  const std::optional<std::vector<std::int64_t>>& small_gram() const { return small_gram_; }

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.name_ == b.name_ && a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  std::string name_;
  std::optional<std::vector<std::int64_t>> small_gram_;
};

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows);

// v^T G w, exact.
BigInt inner(const GramLattice& lattice, const LatticeVector& v, const LatticeVector& w);
BigInt norm(const GramLattice& lattice, const LatticeVector& v);

// Leading principal minors d_1..d_n (fraction-free elimination; stops
// early and returns the prefix up to the first non-positive minor).
std::vector<BigInt> leading_minors(const IntMatrix& m);

// Exact determinant of a square integer matrix (Bareiss with pivoting).
BigInt determinant(const IntMatrix& m);

}  // namespace shellbound
