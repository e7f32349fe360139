#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shellbound/lattice/gram_lattice.hpp"

namespace shellbound {

// Builtin lattices by `family:param` name:
//   zn:<n>        Z^n (identity Gram)
//   an:<n>        A_n root lattice, n >= 1
//   dn:<n>        D_n root lattice, n >= 2
//   e8            E_8 root lattice (Cartan matrix)
//   leech         Leech lattice, even unimodular rank 24, minimum 4
//   scaledz:<a2>  aZ with Gram (a^2)
GramLattice builtin(std::string_view name);

// Integer Gram of the Leech lattice (24 x 24).
const std::vector<std::vector<long>>& leech_gram_rows();

}  // namespace shellbound
