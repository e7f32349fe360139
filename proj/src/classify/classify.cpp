#include "shellbound/classify/classify.hpp"

#include <stdexcept>

#include "shellbound/design/design.hpp"
#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/filter/filter.hpp"
#include "shellbound/lattice/span.hpp"

namespace shellbound {

namespace {

bool is_representative(const LatticeVector& v) {
  for (auto x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

Exclusion a_priori_exclusion(int n, std::int64_t k) {
  if (n < 2 || k < 2) return Exclusion::none;
  if (n == 2) return Exclusion::circle;
  if (k == 2) return n == 8 ? Exclusion::none : Exclusion::filter;
  if (k == 3) return Exclusion::filter;
  return Exclusion::bannai_damerell;
}

void collect_design_evidence(const Shell& shell, const ClassifyOptions& options, Evidence& ev) {
  const PairOptions pair{options.threads, std::nullopt};
  const auto dist = pair_distribution(shell, pair);
  const auto sp = spectrum(dist);
  const int n = shell.dim();
  const std::int64_t k = shell.k();
  ev.spectrum_complete = sp.values == full_shell_spectrum(k);
  const auto design = design_strength(n, dist, default_t_max(k));
  ev.design_strength = design.strength;
  ev.tight = design.tight;
  ev.annihilator_identity = annihilator_identity_holds(n, sp);
}

bool consequences_hold(const Evidence& ev, std::int64_t k) {
  return ev.spectrum_complete.value_or(false) && ev.design_strength.value_or(0) >= 4 * k - 1 &&
         ev.tight.value_or(false) && ev.annihilator_identity.value_or(false);
}

}  // namespace

std::string_view case_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::rank1:
      return "RANK1";
    case EqualityCase::zn:
      return "ZN";
    case EqualityCase::e8:
      return "E8";
    case EqualityCase::none:
      return "NONE";
  }
  return "NONE";
}

std::string_view exclusion_name(Exclusion e) {
  switch (e) {
    case Exclusion::none:
      return "none";
    case Exclusion::filter:
      return "integrality-filter";
    case Exclusion::circle:
      return "circle";
    case Exclusion::bannai_damerell:
      return "bannai-damerell";
  }
  return "none";
}

CountCheck check_equality(const GramLattice& lattice, std::int64_t k, const ClassifyOptions& options) {
  CountCheck c;
  c.count = BigInt(static_cast<unsigned long>(shell_count(lattice, k, EnumerateOptions{options.threads})));
  c.bound = rsd_bound(lattice.dim(), static_cast<long>(k));
  c.equality = c.count == c.bound;
  return c;
}

std::optional<std::vector<LatticeVector>> detect_orthonormal(const Shell& shell) {
  if (shell.k() != 1) throw PreconditionError("orthonormal detection needs the norm-1 shell");
  std::vector<LatticeVector> picked;
  for (const auto& v : shell.vectors()) {
    if (is_representative(v)) picked.push_back(v);
  }
  for (std::size_t i = 0; i < picked.size(); ++i) {
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      if (inner(shell.lattice(), picked[i], picked[j]) != 0) return std::nullopt;
    }
  }
  if (static_cast<int>(picked.size()) != shell.dim()) return std::nullopt;
  return picked;
}

bool reflection_closure(const Shell& shell) {
  if (shell.k() != 2) throw PreconditionError("reflection closure needs the norm-2 shell");
  const auto& roots = shell.vectors();
  LatticeVector image(static_cast<std::size_t>(shell.dim()));
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      const std::int64_t ip = to_int64(inner(shell.lattice(), b, a));
      if (ip == 0) continue;
      for (std::size_t c = 0; c < image.size(); ++c) image[c] = b[c] - ip * a[c];
      if (!shell.contains(image)) return false;
    }
  }
  return true;
}

bool recognize_e8(const Shell& shell) {
  if (shell.k() != 2 || shell.size() != 240) return false;
  const auto span = span_of(shell.vectors(), shell.lattice());
  if (span.rank != 8) return false;
  if (!reflection_closure(shell)) return false;
  return gram_det(span) == 1 && is_even(span);
}

EqualityReport classify(const GramLattice& lattice, std::int64_t k, const ClassifyOptions& options) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const int n = lattice.dim();
  const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{options.threads});

  EqualityReport r;
  r.n = n;
  r.k = k;
  r.count = BigInt(static_cast<unsigned long>(shell.size()));
  r.bound = rsd_bound(n, static_cast<long>(k));
  r.evidence.exclusion = a_priori_exclusion(n, k);

  if (n == 1) {
    // Norms of aZ are a^2 m^2; the bound is 2.
    r.equality = !shell.empty();
    if (r.equality) {
      r.kind = EqualityCase::rank1;
      r.evidence.recognition = "rank-one";
      r.evidence.multiplier = shell.vectors().back().front();
    }
    return r;
  }

  if (r.count != r.bound) return r;

  if (k == 1) {
    if (!detect_orthonormal(shell)) throw std::logic_error("norm-1 shell meets the bound without an orthonormal basis");
    r.evidence.recognition = "orthonormal-basis";
    r.kind = EqualityCase::zn;
  } else if (k == 2) {
    if (!root_filter_check(n, 2).passes) throw std::logic_error("k = 2 equality in a dimension the filter excludes");
    if (!recognize_e8(shell)) throw std::logic_error("k = 2 equality without an E8 root system");
    r.evidence.recognition = "e8-certificate";
    r.kind = EqualityCase::e8;
  } else {
    throw std::logic_error("shell meets the bound for k >= 3, n >= 2");
  }
  r.equality = true;
  collect_design_evidence(shell, options, r.evidence);
  if (!consequences_hold(r.evidence, k)) throw std::logic_error("equality case fails the design consequences");
  return r;
}

ShellGeneratedReport classify_shell_generated(const GramLattice& lattice, std::int64_t k,
                                              const ClassifyOptions& options) {
  const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{options.threads});
  if (shell.empty()) throw PreconditionError("shell-generated classification needs a nonempty shell");
  const auto span = span_of(shell.vectors(), lattice);

  ShellGeneratedReport r;
  r.rank = span.rank;
  r.span_gram = span.gram;
  r.saturates = BigInt(static_cast<unsigned long>(shell.size())) == rsd_bound(span.rank, static_cast<long>(k));
  if (r.saturates) {
    const GramLattice generated(span.gram, lattice.name().empty() ? "span" : "span(" + lattice.name() + ")");
    r.kind = classify(generated, k, options).kind;
  }
  return r;
}

}  // namespace shellbound
