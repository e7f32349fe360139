#include "shellbound/lattice/catalog.hpp"

#include <charconv>
#include <string>

#include "shellbound/errors.hpp"

namespace shellbound {

namespace {

long parse_param(std::string_view name, std::string_view text) {
  long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("bad parameter in lattice name '" + std::string(name) + "'");
  }
  if (value <= 0) {
    throw InputError("lattice parameter must be positive in '" + std::string(name) + "'");
  }
  return value;
}

// Gram of the integer row vectors in `basis` under the standard dot product.
IntMatrix dot_gram(const std::vector<std::vector<long>>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < basis[i].size(); ++c) g[i][j] += basis[i][c] * basis[j][c];
    }
  }
  return to_int_matrix(g);
}

GramLattice make_zn(long n) {
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  for (long i = 0; i < n; ++i) g[i][i] = 1;
  return GramLattice(to_int_matrix(g), "zn:" + std::to_string(n));
}

// Simple roots e_i - e_{i+1} in R^{n+1}.
GramLattice make_an(long n) {
  std::vector<std::vector<long>> basis(n, std::vector<long>(n + 1, 0));
  for (long i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[i][i + 1] = -1;
  }
  return GramLattice(dot_gram(basis), "an:" + std::to_string(n));
}

// e_1 - e_2, ..., e_{n-1} - e_n, e_{n-1} + e_n.
GramLattice make_dn(long n) {
  if (n < 2) throw InputError("dn requires n >= 2");
  std::vector<std::vector<long>> basis(n, std::vector<long>(n, 0));
  for (long i = 0; i + 1 < n; ++i) {
    basis[i][i] = 1;
    basis[i][i + 1] = -1;
  }
  basis[n - 1][n - 2] = 1;
  basis[n - 1][n - 1] = 1;
  return GramLattice(dot_gram(basis), "dn:" + std::to_string(n));
}

// Cartan matrix, Bourbaki labels: chain 1-3-4-5-6-7-8 with 2 attached to 4.
GramLattice make_e8() {
  std::vector<std::vector<long>> g(8, std::vector<long>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  constexpr int kEdges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : kEdges) {
    g[e[0] - 1][e[1] - 1] = -1;
    g[e[1] - 1][e[0] - 1] = -1;
  }
  return GramLattice(to_int_matrix(g), "e8");
}

}  // namespace

// Generated by tools/leech_gram.py: Golay-code construction in
// sqrt(8)-scaled coordinates, LLL-reduced, Gram = B B^T / 8.
const std::vector<std::vector<long>>& leech_gram_rows() {
  static const std::vector<std::vector<long>> rows = {
    {4, 0, 2, 2, 2, 2, 2, 2, 0, 2, 1, 1, 0, 2, 1, 1, 0, 1, 2, 2, 1, 1, -1, 2},
    {0, 4, 2, 2, 2, 2, 2, 0, 2, 2, -1, -1, 0, 2, 1, 1, 0, 1, 0, 0, -1, 1, 2, 1},
    {2, 2, 4, 2, 2, 2, 2, 2, 0, 2, 1, -1, 1, 1, 2, 0, 0, 2, 2, 1, 1, 1, 1, 1},
    {2, 2, 2, 4, 2, 2, 2, 2, 0, 2, 1, -1, 1, 1, 1, 1, 1, 1, 2, 2, 0, 2, 1, 1},
    {2, 2, 2, 2, 4, 2, 2, 1, 1, 2, 1, -1, 1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 2},
    {2, 2, 2, 2, 2, 4, 2, 2, 0, 2, 0, 0, 1, 1, 2, 0, 1, 1, 1, 2, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2, 4, 2, 0, 2, 1, -1, 0, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1},
    {2, 0, 2, 2, 1, 2, 2, 4, -2, 1, 2, -1, 2, -1, 2, -1, 2, 2, 2, 2, 2, 2, 1, 0},
    {0, 2, 0, 0, 1, 0, 0, -2, 4, 1, -2, 1, -1, 2, 0, 1, -1, 0, -1, -1, -2, 0, 0, 2},
    {2, 2, 2, 2, 2, 2, 2, 1, 1, 4, 1, -1, 1, 1, 1, 1, 0, 2, 2, 1, 0, 2, 1, 2},
    {1, -1, 1, 1, 1, 0, 1, 2, -2, 1, 4, -2, 2, -2, 1, -1, 2, 2, 2, 2, 2, 2, 1, 0},
    {1, -1, -1, -1, -1, 0, -1, -1, 1, -1, -2, 4, -2, 2, 0, 0, -1, -2, -1, 0, -1, -1, -2, 1},
    {0, 0, 1, 1, 1, 1, 0, 2, -1, 1, 2, -2, 4, -3, 2, -2, 2, 2, 2, 2, 2, 2, 2, 0},
    {2, 2, 1, 1, 1, 1, 2, -1, 2, 1, -2, 2, -3, 6, 0, 2, -2, -1, 0, 0, -1, 0, -1, 2},
    {1, 1, 2, 1, 1, 2, 1, 2, 0, 1, 1, 0, 2, 0, 4, -2, 2, 2, 2, 2, 2, 2, 2, 1},
    {1, 1, 0, 1, 1, 0, 1, -1, 1, 1, -1, 0, -2, 2, -2, 4, -1, 0, 0, -1, -1, -1, -1, 1},
    {0, 0, 0, 1, 1, 1, 1, 2, -1, 0, 2, -1, 2, -2, 2, -1, 4, 2, 1, 2, 2, 2, 2, 0},
    {1, 1, 2, 1, 2, 1, 2, 2, 0, 2, 2, -2, 2, -1, 2, 0, 2, 4, 2, 1, 2, 2, 2, 1},
    {2, 0, 2, 2, 1, 1, 1, 2, -1, 2, 2, -1, 2, 0, 2, 0, 1, 2, 4, 2, 2, 2, 1, 1},
    {2, 0, 1, 2, 2, 2, 1, 2, -1, 1, 2, 0, 2, 0, 2, -1, 2, 1, 2, 4, 2, 2, 1, 1},
    {1, -1, 1, 0, 1, 1, 1, 2, -2, 0, 2, -1, 2, -1, 2, -1, 2, 2, 2, 2, 4, 1, 1, 0},
    {1, 1, 1, 2, 1, 1, 2, 2, 0, 2, 2, -1, 2, 0, 2, -1, 2, 2, 2, 2, 1, 4, 2, 1},
    {-1, 2, 1, 1, 1, 1, 1, 1, 0, 1, 1, -2, 2, -1, 2, -1, 2, 2, 1, 1, 1, 2, 4, -1},
    {2, 1, 1, 1, 2, 1, 1, 0, 2, 2, 0, 1, 0, 2, 1, 1, 0, 1, 1, 1, 0, 1, -1, 4},
  };
  return rows;
}

GramLattice builtin(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view family = name.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (family == "e8") return make_e8();
    if (family == "leech") return GramLattice(to_int_matrix(leech_gram_rows()), "leech");
    throw InputError("unknown builtin lattice '" + std::string(name) + "'");
  }
  const long param = parse_param(name, name.substr(colon + 1));
  if (family == "zn") return make_zn(param);
  if (family == "an") return make_an(param);
  if (family == "dn") return make_dn(param);
  if (family == "scaledz") {
    return GramLattice(to_int_matrix({{param}}), "scaledz:" + std::to_string(param));
  }
  throw InputError("unknown builtin lattice '" + std::string(name) + "'");
}

}  // namespace shellbound
