#include "shellbound/cli/app.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shellbound/classify/classify.hpp"
#include "shellbound/cli/lattice_file.hpp"
#include "shellbound/design/design.hpp"
#include "shellbound/errors.hpp"
#include "shellbound/exactpoly/gegenbauer.hpp"
#include "shellbound/filter/filter.hpp"
#include "shellbound/lattice/shell.hpp"
#include "shellbound/parallel.hpp"
#include "shellbound/verify/criteria.hpp"

#ifndef SHELLBOUND_VERSION
#define SHELLBOUND_VERSION "0.0.0"
#endif

namespace shellbound::cli {

namespace {

using nlohmann::json;

json integer_json(const BigInt& v) {
  if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json rationals_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

json document(const std::string& command, json inputs, json result) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  doc["version"] = SHELLBOUND_VERSION;
  return doc;
}

struct LatticeArgs {
  std::string source;
  std::string dump_path;
};

GramLattice resolve(const LatticeArgs& args) {
  GramLattice lattice = load_lattice_source(args.source);
  if (!args.dump_path.empty()) {
    std::ofstream f(args.dump_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + args.dump_path + "'");
    f << write_lattice_document(lattice);
  }
  return lattice;
}

json lattice_inputs(const LatticeArgs& args, const GramLattice& lattice, std::int64_t k) {
  return json{{"lattice", args.source}, {"name", lattice.name()}, {"dim", lattice.dim()}, {"k", k}};
}

void add_lattice_options(CLI::App* cmd, LatticeArgs& args, std::int64_t& k) {
  cmd->add_option("--lattice", args.source, "builtin name (zn:<n>, an:<n>, dn:<n>, e8, leech, scaledz:<a2>) or @file")
      ->required();
  cmd->add_option("--k", k, "squared norm")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--dump", args.dump_path, "write the resolved lattice as a lattice file");
}

json evidence_json(const Evidence& ev) {
  return json{{"spectrum_complete", optional_json(ev.spectrum_complete)},
              {"design_strength", optional_json(ev.design_strength)},
              {"tight", optional_json(ev.tight)},
              {"annihilator_identity", optional_json(ev.annihilator_identity)},
              {"recognition", ev.recognition},
              {"exclusion", std::string(exclusion_name(ev.exclusion))},
              {"multiplier", optional_json(ev.multiplier)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact norm-shell bounds, spherical designs and equality classification for integral lattices"};
  app.set_version_flag("--version", SHELLBOUND_VERSION);
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  std::optional<json> report;
  int status = kExitOk;

  LatticeArgs largs;
  std::int64_t k = 0;
  int n = 0;
  int n_max = 0;
  int t_max = 0;
  bool with_vectors = false;
  bool include_slow = false;

  auto* shell_cmd = app.add_subcommand("shell", "enumerate the norm-k shell");
  add_lattice_options(shell_cmd, largs, k);
  shell_cmd->add_flag("--vectors", with_vectors, "include the canonical vector list");
  shell_cmd->add_option("--threads", threads);
  shell_cmd->callback([&] {
    const auto lattice = resolve(largs);
    const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{threads});
    json result{{"count", shell.size()}};
    if (with_vectors) result["vectors"] = shell.vectors();
    auto inputs = lattice_inputs(largs, lattice, k);
    inputs["vectors"] = with_vectors;
    report = document("shell", inputs, result);
  });

  auto* bound_cmd = app.add_subcommand("bound", "shell bound 2 binom(n+2k-2, 2k-1)");
  bound_cmd->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--k", k, "squared norm")->required()->check(CLI::PositiveNumber);
  bound_cmd->callback([&] {
    json result{{"rsd_bound", integer_json(rsd_bound(n, static_cast<long>(k)))}};
    if (n >= 2) result["fisher_bound_4k_minus_1"] = integer_json(fisher_bound(n, static_cast<int>(4 * k - 1)));
    report = document("bound", json{{"n", n}, {"k", k}}, result);
  });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "inner-product set of the normalized shell");
  add_lattice_options(spectrum_cmd, largs, k);
  spectrum_cmd->add_option("--threads", threads);
  spectrum_cmd->callback([&] {
    const auto lattice = resolve(largs);
    const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{threads});
    if (shell.empty()) throw PreconditionError("the norm-" + std::to_string(k) + " shell is empty");
    const auto dist = pair_distribution(shell, PairOptions{threads, std::nullopt});
    json counts = json::object();
    for (const auto& [value, count] : dist.counts) counts[to_fraction_string(value)] = count;
    const auto sp = spectrum(dist);
    json result{{"count", shell.size()}, {"values", rationals_json(sp.values)}, {"s", sp.values.size()},
                {"pair_counts", counts}};
    report = document("spectrum", lattice_inputs(largs, lattice, k), result);
  });

  auto* design_cmd = app.add_subcommand("design", "spherical design strength and tightness");
  add_lattice_options(design_cmd, largs, k);
  design_cmd->add_option("--tmax", t_max, "largest strength to test (default 4k+3)")->check(CLI::PositiveNumber);
  design_cmd->add_option("--threads", threads);
  design_cmd->callback([&] {
    const auto lattice = resolve(largs);
    if (lattice.dim() < 2) throw PreconditionError("design strength needs dimension >= 2");
    const Shell shell = enumerate_shell(lattice, k, EnumerateOptions{threads});
    if (shell.empty()) throw PreconditionError("the norm-" + std::to_string(k) + " shell is empty");
    const int cap = t_max > 0 ? t_max : default_t_max(k);
    const auto rep = design_strength(shell, cap, PairOptions{threads, std::nullopt});
    json result{{"size", rep.size},
                {"strength", rep.strength},
                {"strength_at_least_tmax", rep.capped},
                {"tight", rep.tight},
                {"fisher_bound", integer_json(rep.fisher)}};
    auto inputs = lattice_inputs(largs, lattice, k);
    inputs["tmax"] = cap;
    report = document("design", inputs, result);
  });

  auto* filter_cmd = app.add_subcommand("filter", "integrality root filter on C_{2k-1}");
  filter_cmd->add_option("--k", k, "squared norm")->required()->check(CLI::PositiveNumber);
  auto* n_opt = filter_cmd->add_option("--n", n, "single dimension")->check(CLI::Range(2, 1 << 20));
  auto* nmax_opt = filter_cmd->add_option("--nmax", n_max, "search dimensions 2..nmax (default 200)")
                       ->check(CLI::Range(2, 1 << 20));
  n_opt->excludes(nmax_opt);
  filter_cmd->add_option("--threads", threads);
  filter_cmd->callback([&] {
    if (*n_opt) {
      const auto rep = root_filter_check(n, static_cast<long>(k));
      json evals = json::object();
      for (const auto& [u, v] : rep.evaluations) evals[to_fraction_string(u)] = to_fraction_string(v);
      report = document("filter", json{{"k", k}, {"n", n}}, json{{"passes", rep.passes}, {"evaluations", evals}});
    } else {
      const int limit = *nmax_opt ? n_max : 200;
      report = document("filter", json{{"k", k}, {"nmax", limit}},
                        json{{"dimensions", filter_search(static_cast<long>(k), limit, threads)}});
    }
  });

  auto* classify_cmd = app.add_subcommand("classify", "equality classification for the norm-k shell");
  add_lattice_options(classify_cmd, largs, k);
  classify_cmd->add_option("--threads", threads);
  classify_cmd->callback([&] {
    const auto lattice = resolve(largs);
    const auto rep = classify(lattice, k, ClassifyOptions{threads});
    json result{{"count", integer_json(rep.count)},
                {"bound", integer_json(rep.bound)},
                {"equality", rep.equality},
                {"case", std::string(case_name(rep.kind))},
                {"evidence", evidence_json(rep.evidence)}};
    report = document("classify", lattice_inputs(largs, lattice, k), result);
  });

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the verification checklist");
  verify_cmd->add_flag("--include-slow", include_slow, "also run the Leech lattice criteria");
  verify_cmd->add_option("--lattice", largs.source, "substitute lattice for the E8 criteria");
  verify_cmd->add_option("--threads", threads);
  verify_cmd->callback([&] {
    verify::VerifyOptions opts;
    opts.include_slow = include_slow;
    opts.threads = threads;
    if (!largs.source.empty()) opts.e8_override = load_lattice_source(largs.source);
    opts.progress = [&err](std::string_view msg) { err << "[verify] " << msg << std::endl; };
    const auto results = verify::run_criteria(opts);
    json rows = json::array();
    for (const auto& r : results) {
      err << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.seconds << "s  " << r.detail << "\n";
      rows.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    const bool ok = verify::all_passed(results);
    json inputs{{"include_slow", include_slow}};
    if (!largs.source.empty()) inputs["lattice"] = largs.source;
    report = document("verify-paper", inputs, json{{"criteria", rows}, {"all_passed", ok}});
    status = ok ? kExitOk : kExitVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  if (report) out << report->dump(2) << "\n";
  return status;
}

}  // namespace shellbound::cli
