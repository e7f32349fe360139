#pragma once

#include <span>

#include "shellbound/lattice/gram_lattice.hpp"

namespace shellbound {

// Integer row span of a set of lattice vectors: a Hermite normal form basis
// (coordinates in the ambient lattice basis) and its Gram matrix.
struct SpanBasis {
  int rank = 0;
  IntMatrix basis;  // rank x n, HNF
  IntMatrix gram;   // rank x rank
};

SpanBasis span_of(std::span<const LatticeVector> vectors, const GramLattice& lattice);

// Hermite normal form of the integer row span of `rows` (zero rows dropped).
IntMatrix hermite_normal_form(const IntMatrix& rows);

BigInt gram_det(const SpanBasis& span);
bool is_even(const SpanBasis& span);

}  // namespace shellbound
