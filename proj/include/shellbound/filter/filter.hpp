#pragma once

#include <map>
#include <set>
#include <vector>

#include "shellbound/exactpoly/rational.hpp"

namespace shellbound {

// Values of C_{2k-1}^{(n)} at the candidate roots j/k, j = 0..k-1.
struct FilterReport {
  int n = 0;
  long k = 0;
  bool passes = false;
  std::map<Rational, Rational> evaluations;
};

// C_{2k-1}^{(n)} is odd of degree 2k-1, so vanishing at 0, +-1/k, ...,
// +-(k-1)/k means those are exactly its roots.
FilterReport root_filter_check(int n, long k);

// Every n in [2, n_max] whose filter passes.
std::vector<int> filter_search(long k, int n_max, unsigned threads = 0);

// The k = 2 filter in closed form: the nonzero root sqrt(3/(n+4)) must be
// 1/2, which forces n = 8.
int k2_solve();

struct K3Contradiction {
  int n_from_sum = 0;
  Rational product_required;
  Rational product_actual;
  bool consistent = false;
};

// The quartic-in-u^2 factor of C_5 must have roots 1/9 and 4/9. Their sum
// forces n; the product at that n does not match.
K3Contradiction k3_contradiction();

// Certifies (k-1)/k < cos(pi/(2k)) < 1 with exact rationals, so the
// adjacent-vertex inner product of a regular 4k-gon is not in (1/k)Z.
bool circle_exclusion(long k);

// Strengths t >= 4 for which tight spherical t-designs in dimension >= 3
// can exist (Bannai-Damerell).
const std::set<int>& bd_allowed_strengths();

}  // namespace shellbound
