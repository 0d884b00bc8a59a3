#pragma once

#include <string>
#include <vector>

#include "tspread/families.hpp"

namespace tspread {

/// Parameter box for a suite sweep. max_c = 0 means "up to d".
struct GridBounds {
  int max_n = 8;
  int max_d = 5;
  int max_c = 0;
  int max_t = 2;
};

struct PointOutcome {
  std::string params;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  long long points = 0;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  std::vector<PointOutcome> failures;  // first failure always present
  std::vector<PointOutcome> skips;
  std::vector<PointOutcome> notes;  // informational, e.g. literal-form gaps
  double elapsed_ms = 0.0;

  bool ok() const { return failed == 0; }
};

std::vector<std::string> suite_names();

/// Runs the named verification suite over the grid. With timeout_secs > 0
/// each point is capped cooperatively and an expired point is recorded as
/// skipped rather than aborting the sweep. Points are dispatched to a small
/// worker pool unless parallel is false; outcomes merge in grid order, so
/// the report is deterministic either way.
SuiteReport run_suite(const std::string& name, const GridBounds& bounds,
                      double timeout_secs = 0.0, bool parallel = true);

}  // namespace tspread
