#pragma once

#include <vector>

#include "shellbound/exactpoly/poly.hpp"
#include "shellbound/exactpoly/rational.hpp"

namespace shellbound {

// a! / (b! (a-b)!) for b <= a, else 0.
BigInt binom(unsigned long a, unsigned long b);

// Dimension of the space of degree-i harmonic polynomials on R^n.
BigInt harm_dim(int n, int i);

// Normalized Gegenbauer polynomials Q_0..Q_max_degree for S^{n-1}:
// Q_0 = 1, Q_1 = n u, Q_i(1) = harm_dim(n, i).
std::vector<Poly> gegenbauer_family(int n, int max_degree);
Poly gegenbauer_Q(int n, int i);

// Q_m + Q_{m-2} + ... down to Q_0 or Q_1.
Poly cumulative_C(int n, int m);

// Explicit factored forms for m in {1, 3, 5}.
Poly closed_form_C(int n, int m);

// Lower bound on the size of a spherical t-design in S^{n-1}.
BigInt fisher_bound(int n, int t);

// 2 binom(n + 2k - 2, 2k - 1): upper bound on the norm-k shell of an
// integral lattice of rank n.
BigInt rsd_bound(int n, long k);

}  // namespace shellbound
