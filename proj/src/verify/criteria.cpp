#include "shellbound/verify/criteria.hpp"

#include <chrono>
#include <sstream>
#include <utility>

#include "shellbound/classify/classify.hpp"
#include "shellbound/design/design.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/filter/filter.hpp"
#include "shellbound/lattice/catalog.hpp"
#include "shellbound/lattice/shell.hpp"
#include "shellbound/verify/oracles.hpp"

namespace shellbound::verify {

namespace {

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (!ok_) failures_ << "; ";
    ok_ = false;
    failures_ << what;
  }
  bool ok() const { return ok_; }
  std::string detail(const std::string& summary) const { return ok_ ? summary : failures_.str(); }

 private:
  bool ok_ = true;
  std::ostringstream failures_;
};

using Outcome = std::pair<bool, std::string>;

std::string join(const std::vector<Rational>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + to_fraction_string(values[i]);
  return s + "}";
}

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Lattices swept by the universal-inequality and oracle criteria.
std::vector<std::string> catalog_names(int max_dim) {
  std::vector<std::string> names;
  for (int n = 1; n <= max_dim; ++n) {
    names.push_back("zn:" + std::to_string(n));
    names.push_back("an:" + std::to_string(n));
    if (n >= 2) names.push_back("dn:" + std::to_string(n));
  }
  if (max_dim >= 8) names.push_back("e8");
  for (int a2 : {1, 2, 4, 9}) names.push_back("scaledz:" + std::to_string(a2));
  return names;
}

Outcome check_e8(const GramLattice& lattice, unsigned threads) {
  Checker c;
  const Shell shell = enumerate_shell(lattice, 2, EnumerateOptions{threads});
  c.expect(shell.size() == 240, "N_2 = " + std::to_string(shell.size()) + ", expected 240");
  if (shell.empty()) return {false, "empty norm-2 shell"};
  const auto dist = pair_distribution(shell, PairOptions{threads, std::nullopt});
  const auto sp = spectrum(dist);
  const std::vector<Rational> expected = {Rational(-1), make_rational(-1, 2), Rational(0), make_rational(1, 2)};
  c.expect(sp.values == expected, "spectrum " + join(sp.values));
  if (lattice.dim() >= 2) {
    const auto design = design_strength(lattice.dim(), dist, default_t_max(2));
    c.expect(design.strength == 7 && !design.capped, "strength " + std::to_string(design.strength));
    c.expect(design.tight, "not tight");
    c.expect(annihilator_identity_holds(lattice.dim(), sp), "annihilator identity fails");
  }
  try {
    const auto report = classify(lattice, 2, ClassifyOptions{threads});
    c.expect(report.equality && report.kind == EqualityCase::e8,
             "classify -> " + std::string(case_name(report.kind)));
  } catch (const std::exception& e) {
    c.expect(false, std::string("classify threw: ") + e.what());
  }
  return {c.ok(), c.detail("240 roots, spectrum {-1,-1/2,0,1/2}, tight 7-design, identity holds, case E8")};
}

Outcome criterion_bounds() {
  Checker c;
  c.expect(rsd_bound(8, 2) == 240, "rsd_bound(8,2)");
  c.expect(rsd_bound(24, 4) == 4071600, "rsd_bound(24,4)");
  c.expect(rsd_bound(2, 3) == 12, "rsd_bound(2,3)");
  for (long k = 1; k <= 10; ++k) c.expect(rsd_bound(1, k) == 2, "rsd_bound(1," + std::to_string(k) + ")");
  return {c.ok(), c.detail("240, 4071600, 12, and 2 for n = 1")};
}

Outcome criterion_zn_family(unsigned threads) {
  Checker c;
  for (int n = 2; n <= 24; ++n) {
    const auto lattice = builtin("zn:" + std::to_string(n));
    const auto count = shell_count(lattice, 1, EnumerateOptions{threads});
    c.expect(big(count) == 2 * n && rsd_bound(n, 1) == 2 * n, "zn:" + std::to_string(n) + " count");
    const auto report = classify(lattice, 1, ClassifyOptions{threads});
    c.expect(report.kind == EqualityCase::zn, "zn:" + std::to_string(n) + " case");
  }
  return {c.ok(), c.detail("N_1(Z^n) = 2n = bound, case ZN for n in [2,24]")};
}

Outcome criterion_filters() {
  Checker c;
  c.expect(filter_search(2, 500) == std::vector<int>{8}, "filter_search(2,500) != [8]");
  c.expect(filter_search(3, 500).empty(), "filter_search(3,500) not empty");
  const auto k3 = k3_contradiction();
  c.expect(k3.n_from_sum == 10, "k3 n");
  c.expect(k3.product_required == make_rational(4, 81), "k3 required product");
  c.expect(k3.product_actual == make_rational(5, 96), "k3 actual product");
  c.expect(!k3.consistent, "k3 consistent");
  c.expect(k2_solve() == 8, "k2_solve");
  return {c.ok(), c.detail("k=2 -> [8], k=3 -> [], 5/96 != 4/81, n = 8")};
}

Outcome criterion_closed_forms() {
  Checker c;
  for (int n = 2; n <= 16; ++n) {
    for (int m : {1, 3, 5}) {
      c.expect(closed_form_C(n, m) == cumulative_C(n, m), "closed form n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    for (int m = 0; m <= 12; ++m) {
      const Rational expected(binom(static_cast<unsigned long>(n + m - 1), static_cast<unsigned long>(m)));
      c.expect(cumulative_C(n, m)(Rational(1)) == expected, "C(1) n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return {c.ok(), c.detail("closed forms match, C_m(1) = binom(n+m-1, m)")};
}

Outcome criterion_circle() {
  Checker c;
  for (long k = 2; k <= 1000; ++k) c.expect(circle_exclusion(k), "k=" + std::to_string(k));
  return {c.ok(), c.detail("certified for k in [2,1000]")};
}

Outcome criterion_rank_one(unsigned threads) {
  Checker c;
  for (long a2 : {1L, 2L, 4L, 9L}) {
    const auto lattice = builtin("scaledz:" + std::to_string(a2));
    for (long k = 1; k <= 40; ++k) {
      bool represented = false;
      for (long m = 1; a2 * m * m <= k; ++m) represented |= a2 * m * m == k;
      const auto report = classify(lattice, k, ClassifyOptions{threads});
      const bool ok = report.equality == represented &&
                      (report.kind == EqualityCase::rank1) == represented;
      c.expect(ok, "scaledz:" + std::to_string(a2) + " k=" + std::to_string(k));
    }
  }
  return {c.ok(), c.detail("equality iff k = a^2 m^2")};
}

Outcome criterion_universal(bool include_slow, unsigned threads, const VerifyOptions& options) {
  Checker c;
  std::size_t checked = 0;
  for (const auto& name : catalog_names(8)) {
    const auto lattice = builtin(name);
    for (long k = 1; k <= 6; ++k) {
      const auto count = shell_count(lattice, k, EnumerateOptions{threads});
      c.expect(big(count) <= rsd_bound(lattice.dim(), k), name + " k=" + std::to_string(k));
      ++checked;
    }
  }
  if (include_slow) {
    if (options.progress) options.progress("leech: enumerating norm-4 shell");
    const auto count = shell_count(builtin("leech"), 4, EnumerateOptions{threads});
    c.expect(big(count) <= rsd_bound(24, 4), "leech k=4");
    ++checked;
  }
  return {c.ok(), c.detail(std::to_string(checked) + " (lattice, k) pairs within the bound")};
}

Outcome criterion_consequences(const GramLattice& e8, unsigned threads) {
  Checker c;
  auto conjunction = [&](const GramLattice& lattice, std::int64_t k, const std::string& label) {
    const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{threads});
    if (shell.empty()) {
      c.expect(false, label + " empty shell");
      return;
    }
    const auto dist = pair_distribution(shell, PairOptions{threads, std::nullopt});
    const auto sp = spectrum(dist);
    c.expect(sp.values == full_shell_spectrum(k), label + " spectrum " + join(sp.values));
    const auto design = design_strength(lattice.dim(), dist, default_t_max(k));
    c.expect(design.strength >= 4 * k - 1, label + " strength " + std::to_string(design.strength));
    c.expect(design.tight, label + " not tight");
    c.expect(annihilator_identity_holds(lattice.dim(), sp), label + " annihilator identity");
  };
  for (int n = 2; n <= 10; ++n) conjunction(builtin("zn:" + std::to_string(n)), 1, "zn:" + std::to_string(n));
  conjunction(e8, 2, "e8");
  return {c.ok(), c.detail("full spectrum, strength >= 4k-1, tight, identity for (zn:n,1) and (e8,2)")};
}

Outcome criterion_oracles(unsigned threads) {
  Checker c;
  std::size_t shells = 0;
  std::size_t moment_checks = 0;
  for (const auto& name : catalog_names(8)) {
    const auto lattice = builtin(name);
    for (std::int64_t k = 1; k <= 6; ++k) {
      const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{threads});
      if (lattice.dim() <= 6) {
        c.expect(shell.vectors() == oracle::box_search(lattice, k), name + " k=" + std::to_string(k) + " enumeration");
        ++shells;
      }
      if (lattice.dim() >= 2 && !shell.empty() && shell.size() <= 200) {
        const auto dist = pair_distribution(shell, PairOptions{threads, std::nullopt});
        for (int i = 1; i <= 8; ++i) {
          c.expect(moment_sum(lattice.dim(), i, dist) == oracle::direct_moment_sum(shell, i),
                   name + " k=" + std::to_string(k) + " moment " + std::to_string(i));
          ++moment_checks;
        }
      }
    }
  }
  return {c.ok(), c.detail(std::to_string(shells) + " shells match box search, " + std::to_string(moment_checks) +
                           " moment sums match direct summation")};
}

Outcome criterion_negative_controls(unsigned threads) {
  Checker c;
  const auto d4 = classify(builtin("dn:4"), 2, ClassifyOptions{threads});
  c.expect(d4.count == 24 && d4.count < d4.bound && !d4.equality && d4.kind == EqualityCase::none, "dn:4 k=2");
  const auto z8 = classify(builtin("zn:8"), 2, ClassifyOptions{threads});
  c.expect(z8.count == 112 && !z8.equality && z8.kind == EqualityCase::none, "zn:8 k=2");
  bool rejected = false;
  try {
    rejected = !check_e8(perturbed_e8(), threads).first;
  } catch (const std::exception&) {
    rejected = true;
  }
  c.expect(rejected, "perturbed E8 passes the E8 checks");
  return {c.ok(), c.detail("dn:4 and zn:8 -> NONE, perturbed E8 rejected")};
}

}  // namespace

GramLattice perturbed_e8() {
  IntMatrix g = builtin("e8").gram();
  g[0][2] = 0;
  g[2][0] = 0;
  return GramLattice(std::move(g), "e8-perturbed");
}

std::vector<CriterionResult> run_criteria(const VerifyOptions& options) {
  const unsigned threads = options.threads;
  const GramLattice e8 = options.e8_override.value_or(builtin("e8"));
  std::vector<CriterionResult> results;

  auto run = [&](std::string id, std::string title, double budget, bool slow, const std::function<Outcome()>& body) {
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.budget_seconds = budget;
    r.slow = slow;
    if (slow && !options.include_slow) {
      r.passed = r.check_passed = true;
      r.detail = "skipped";
      results.push_back(std::move(r));
      return;
    }
    if (options.progress) options.progress("running " + r.id);
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = body();
      r.check_passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.check_passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.check_passed && (budget <= 0.0 || r.seconds <= budget);
    if (r.check_passed && !r.passed) r.detail += " (over time budget)";
    results.push_back(std::move(r));
  };

  run("C01-bounds", "bounds table", 0.001, false, criterion_bounds);
  run("C02-zn-family", "Z^n equality family", 1.0, false, [&] { return criterion_zn_family(threads); });
  run("C03-e8-equality", "E8 equality", 5.0, false, [&] { return check_e8(e8, threads); });
  run("C04-filters", "integrality filters", 1.0, false, criterion_filters);
  run("C05-closed-forms", "closed-form cross-validation", 1.0, false, criterion_closed_forms);
  run("C06-circle", "circle exclusion", 1.0, false, criterion_circle);
  run("C07-rank-one", "rank-1 family", 1.0, false, [&] { return criterion_rank_one(threads); });
  run("C08-universal-inequality", "shell count within the bound", 0.0, false,
      [&] { return criterion_universal(options.include_slow, threads, options); });
  run("C09-equality-consequences", "design consequences on equality cases", 10.0, false,
      [&] { return criterion_consequences(e8, threads); });

  // Leech: two separately budgeted phases.
  {
    CriterionResult r;
    r.id = "C10-leech";
    r.title = "Leech minimal vectors";
    r.slow = true;
    r.budget_seconds = 600.0 + 1800.0;
    if (!options.include_slow) {
      r.passed = r.check_passed = true;
      r.detail = "skipped";
    } else {
      if (options.progress) options.progress("running C10-leech: enumerating norm-4 shell");
      Checker c;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const Shell shell = enumerate_shell(builtin("leech"), 4, EnumerateOptions{threads});
        const double enum_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(shell.size() == 196560, "N_4 = " + std::to_string(shell.size()));
        c.expect(big(shell.size()) < rsd_bound(24, 4), "not below the bound");
        c.expect(enum_s <= 600.0, "enumeration over 10 min");
        if (options.progress) options.progress("running C10-leech: pair distribution");
        const auto t1 = std::chrono::steady_clock::now();
        const auto dist = pair_distribution(shell, PairOptions{threads, std::nullopt});
        const double pair_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        c.expect(pair_s <= 1800.0, "pair distribution over 30 min");
        const auto sp = spectrum(dist);
        const std::vector<Rational> expected = {Rational(-1), make_rational(-1, 2), make_rational(-1, 4),
                                                Rational(0),  make_rational(1, 4),  make_rational(1, 2)};
        c.expect(sp.values == expected, "spectrum " + join(sp.values));
        const auto design = design_strength(24, dist, 13);
        c.expect(design.strength == 11 && !design.capped, "strength " + std::to_string(design.strength));
        c.expect(design.tight && fisher_bound(24, 11) == 196560, "not tight");
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << "196560 < 4071600, spectrum " << join(expected) << ", tight 11-design";
        r.detail = c.detail(os.str());
      } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
        r.detail = c.detail("");
      }
      r.check_passed = r.passed = c.ok();
    }
    results.push_back(std::move(r));
  }

  run("C11-oracle-equivalence", "enumeration and moments against brute force", 30.0, false,
      [&] { return criterion_oracles(threads); });
  run("C12-negative-controls", "negative controls", 5.0, false, [&] { return criterion_negative_controls(threads); });
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace shellbound::verify
