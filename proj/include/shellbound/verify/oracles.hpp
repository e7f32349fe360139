#pragma once

// Reference computations that share no code path with the optimized
// enumeration and pair-distribution routines.

#include <cstdint>
#include <vector>

#include "shellbound/exactpoly/rational.hpp"
#include "shellbound/lattice/gram_lattice.hpp"
#include "shellbound/lattice/shell.hpp"

namespace shellbound::oracle {

// Exact inverse of a nonsingular integer matrix.
std::vector<std::vector<Rational>> inverse(const IntMatrix& m);

// max |x_i| over x^T G x <= k is sqrt(k (G^-1)_ii); floor of that per axis.
std::vector<std::int64_t> box_bounds(const GramLattice& lattice, std::int64_t k);

// All x in the box with x^T G x == k, lexicographically sorted.
std::vector<LatticeVector> box_search(const GramLattice& lattice, std::int64_t k);

// sum over (x, y) in X^2 of Q_i(<x,y>/k) by direct double summation.
Rational direct_moment_sum(const Shell& shell, int i);

}  // namespace shellbound::oracle
