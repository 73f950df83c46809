#pragma once

// Exhaustive verification of the toolkit's structural claims over all
// non-isomorphic trees up to a per-check budget. Checks run tree-parallel
// with a deterministic merge, so reports are reproducible (timing aside)
// regardless of the worker count.

#include <string>
#include <vector>

#include <json.hpp>

#include "superdom/graph.hpp"

namespace superdom {

struct Violation {
  std::string tree;    // edge-list text of the offending instance
  std::string detail;
};

struct VerifyReport {
  std::string theorem_id;
  int n_min = 0;
  int n_max = 0;
  long long instances_checked = 0;
  long long skipped_precondition = 0;
  std::vector<Violation> violations;
  long long elapsed_ms = 0;
  bool pass() const { return violations.empty(); }
};

// Registered check ids, in the order verify_all runs them.
const std::vector<std::string>& registered_checks();

// Runs one named check over every applicable tree with at most
// min(n_max, per-check cap) vertices. workers = 0 picks a count from
// SUPERDOM_THREADS or the hardware. Unknown ids raise invalid_argument
// listing the valid ones.
VerifyReport verify(const std::string& theorem_id, int n_max, int workers = 0);

std::vector<VerifyReport> verify_all(int n_max, int workers = 0);

nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace superdom
