#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shellbound/exactpoly/rational.hpp"
#include "shellbound/lattice/gram_lattice.hpp"
#include "shellbound/lattice/shell.hpp"

namespace shellbound {

enum class EqualityCase { rank1, zn, e8, none };
std::string_view case_name(EqualityCase c);

// What rules out equality a priori for a given (n, k), if anything.
enum class Exclusion { none, filter, circle, bannai_damerell };
std::string_view exclusion_name(Exclusion e);

struct Evidence {
  // Consequences checked on equality cases with n >= 2.
  std::optional<bool> spectrum_complete;
  std::optional<int> design_strength;
  std::optional<bool> tight;
  std::optional<bool> annihilator_identity;
  // How the lattice was recognised ("orthonormal-basis", "e8-certificate",
  // "rank-one") or empty.
  std::string recognition;
  Exclusion exclusion = Exclusion::none;
  // Rank one: k = a^2 m^2.
  std::optional<std::int64_t> multiplier;
};

struct EqualityReport {
  int n = 0;
  std::int64_t k = 0;
  BigInt count;
  BigInt bound;
  bool equality = false;
  EqualityCase kind = EqualityCase::none;
  Evidence evidence;
};

struct CountCheck {
  BigInt count;
  BigInt bound;
  bool equality = false;
};

struct ClassifyOptions {
  unsigned threads = 0;
};

CountCheck check_equality(const GramLattice& lattice, std::int64_t k, const ClassifyOptions& options = {});

// One vector per antipodal pair of a norm-1 shell, if they form n mutually
// orthogonal vectors.
std::optional<std::vector<LatticeVector>> detect_orthonormal(const Shell& shell);

// Every s_a(b) = b - <b,a> a stays in the norm-2 shell.
bool reflection_closure(const Shell& shell);

// 240 roots spanning an even unimodular rank-8 lattice, closed under
// reflections.
bool recognize_e8(const Shell& shell);

EqualityReport classify(const GramLattice& lattice, std::int64_t k, const ClassifyOptions& options = {});

struct ShellGeneratedReport {
  int rank = 0;
  bool saturates = false;
  EqualityCase kind = EqualityCase::none;
  IntMatrix span_gram;
};

// Classifies the sublattice generated by the norm-k shell.
ShellGeneratedReport classify_shell_generated(const GramLattice& lattice, std::int64_t k,
                                              const ClassifyOptions& options = {});

}  // namespace shellbound
