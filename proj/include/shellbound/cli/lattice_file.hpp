#pragma once

#include <string>
#include <string_view>

#include "shellbound/lattice/gram_lattice.hpp"

namespace shellbound::cli {

// Lattice document: {"name": <string>, "dim": <int>, "gram": [[<int>...]...]}.
// Integers may be arbitrarily large; they are read from the raw JSON token
// (or from a string of decimal digits), never through a double.
GramLattice parse_lattice_document(std::string_view text);
std::string write_lattice_document(const GramLattice& lattice);

// "@path" reads a lattice file; anything else is a builtin name.
GramLattice load_lattice_source(const std::string& source);

}  // namespace shellbound::cli
