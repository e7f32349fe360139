#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shellbound/lattice/gram_lattice.hpp"

namespace shellbound::verify {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  // false when the check itself failed, regardless of timing
  bool check_passed = false;
  std::string detail;
  double seconds = 0.0;
  // 0 means no time budget.
  double budget_seconds = 0.0;
  bool slow = false;
};

struct VerifyOptions {
  bool include_slow = false;
  // Replaces the builtin E8 in the E8 criteria (negative-control runs).
  std::optional<GramLattice> e8_override;
  unsigned threads = 0;
  std::function<void(std::string_view)> progress;
};

// The executable checklist of equality cases and comparison examples.
// Slow criteria are reported as skipped (passed, detail "skipped") unless
// include_slow is set.
std::vector<CriterionResult> run_criteria(const VerifyOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

// E8 Cartan matrix with the (1,3) bond removed: positive definite, but
// A1 + D7 rather than E8.
GramLattice perturbed_e8();

}  // namespace shellbound::verify
