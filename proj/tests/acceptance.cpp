// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Time limits are
// part of the criteria and are enforced, not advisory.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tspread/block_type.hpp"
#include "tspread/linear_quotients.hpp"
#include "tspread/oracle.hpp"
#include "tspread/sorting.hpp"
#include "tspread/spread.hpp"
#include "tspread/suites.hpp"

using namespace tspread;

namespace {

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool suite_clean(const std::string& name, const GridBounds& bounds,
                 double limit_secs, std::string& detail) {
  SuiteReport report = run_suite(name, bounds);
  if (!report.ok()) {
    detail = name + ": " + std::to_string(report.failed) + " failures, first " +
             report.failures.front().params + " (" +
             report.failures.front().detail + ")";
    return false;
  }
  if (report.skipped != 0) {
    detail = name + ": " + std::to_string(report.skipped) + " skipped points";
    return false;
  }
  if (limit_secs > 0 && report.elapsed_ms > limit_secs * 1000) {
    detail = name + ": took " + std::to_string(report.elapsed_ms / 1000) +
             " s, limit " + std::to_string(limit_secs) + " s";
    return false;
  }
  std::ostringstream note;
  note << name << ": " << report.passed << "/" << report.points << " points in "
       << static_cast<long long>(report.elapsed_ms) << " ms";
  if (!report.notes.empty())
    note << ", " << report.notes.size() << " informational notes";
  if (!detail.empty()) detail += "; ";
  detail += note.str();
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "analytic spread of the four worked examples, both routes, < 1 s each",
                      [](std::string& detail) {
    struct Case {
      CBounded spec;
      long long expected;
    };
    for (const Case& c : {Case{{3, 12, 4, 3}, 7}, Case{{3, 16, 6, 2}, 16},
                          Case{{2, 5, 3, 1}, 5}, Case{{2, 9, 6, 1}, 7}}) {
      auto start = std::chrono::steady_clock::now();
      SpreadResult res = analytic_spread(c.spec);
      double secs = seconds_since(start);
      if (res.graph_value != c.expected || res.closed_value != c.expected ||
          !res.raw_closed_value || *res.raw_closed_value != c.expected) {
        detail = describe(c.spec) + ": got graph " +
                 std::to_string(res.graph_value) + ", closed " +
                 std::to_string(res.closed_value) + ", want " +
                 std::to_string(c.expected);
        return false;
      }
      if (secs >= 1.0) {
        detail = describe(c.spec) + ": took " + std::to_string(secs) + " s";
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({2, "relation-graph shape for cbounded(3,12,4,3): 10 vertices, four interval components, < 1 s",
                      [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    RelationGraph gamma = relation_graph(generators(CBounded{3, 12, 4, 3}));
    double secs = seconds_since(start);
    std::vector<std::vector<int>> expected = {
        {1, 2}, {4, 5, 6}, {7, 8, 9}, {11, 12}};
    if (gamma.vertices.size() != 10 || gamma.components != expected) {
      detail = "vertex count " + std::to_string(gamma.vertices.size());
      return false;
    }
    if (secs >= 1.0) {
      detail = "took " + std::to_string(secs) + " s";
      return false;
    }
    return true;
  }});

  criteria.push_back({3, "quotient sets of the two worked generators",
                      [](std::string& detail) {
    bool ok1 = quotient_set(parse_monomial("x1*x2*x3*x6*x10", 10),
                            CBounded{3, 10, 5, 1}) ==
               std::vector<int>{5, 7, 8, 9};
    bool ok2 = quotient_set(parse_monomial("x1^3*x3^2*x5", 5),
                            CBounded{3, 5, 6, 0}) == std::vector<int>{2, 3, 4};
    if (!ok1 || !ok2) detail = "quotient set mismatch";
    return ok1 && ok2;
  }});

  criteria.push_back({4, "prefix colons generated by the gap variables over n<=8, d<=5, c<=d, t<=2, < 2 min",
                      [](std::string& detail) {
    return suite_clean("linear-quotients", GridBounds{8, 5, 0, 2}, 120, detail);
  }});

  criteria.push_back({5, "Betti numbers: shift-invariant over the same grid and equal to oracle row sums when |G| <= 25",
                      [](std::string& detail) {
    return suite_clean("betti-shift", GridBounds{8, 5, 0, 2}, 0, detail) &&
           suite_clean("betti-oracle", GridBounds{8, 5, 0, 2}, 0, detail);
  }});

  criteria.push_back({6, "closed-form height equals the cover oracle for n <= 9",
                      [](std::string& detail) {
    return suite_clean("height", GridBounds{9, 6, 0, 3}, 0, detail);
  }});

  criteria.push_back({7, "sorting closure and the exchange condition (pairs) over the criterion-4 grid, < 5 min",
                      [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    if (!suite_clean("sortable", GridBounds{8, 5, 0, 2}, 0, detail))
      return false;
    if (!suite_clean("l-exchange", GridBounds{8, 5, 0, 2}, 0, detail))
      return false;
    double secs = seconds_since(start);
    if (secs >= 300) {
      detail = "took " + std::to_string(secs) + " s";
      return false;
    }
    return true;
  }});

  criteria.push_back({8, "closed-form vs graph spread over n<=12, d<=6, c<=d, t<=3, with the derived value at cbounded(2,7,5,1)",
                      [](std::string& detail) {
    if (!suite_clean("spread", GridBounds{12, 6, 0, 3}, 0, detail))
      return false;
    SpreadResult res = analytic_spread(CBounded{2, 7, 5, 1});
    if (res.closed_value != 3 || res.graph_value != 3) {
      detail = "cbounded(2,7,5,1) gave " + std::to_string(res.closed_value);
      return false;
    }
    return true;
  }});

  criteria.push_back({9, "socle-degree regularity formula over n<=6, d<=6, 1<k<n, < 2 min",
                      [](std::string& detail) {
    return suite_clean("regularity-blocktype", GridBounds{6, 6, 0, 0}, 120,
                       detail);
  }});

  criteria.push_back({10, "power n-1 equals the matching maximal-ideal power for n<=5, d<=4, 2<=k<n",
                      [](std::string& detail) {
    return suite_clean("power-identity", GridBounds{5, 4, 0, 0}, 0, detail);
  }});

  criteria.push_back({11, "fiber-cone regularity: (4,2,2) -> 2 and the pinched case (3,3,2) -> 2 via j = 2",
                      [](std::string& detail) {
    if (fiber_cone_regularity(4, 2, 2) != 2) {
      detail = "(4,2,2) gave " + std::to_string(fiber_cone_regularity(4, 2, 2));
      return false;
    }
    if (smallest_power_j(3, 3, 2) != 2 || fiber_cone_regularity(3, 3, 2) != 2) {
      detail = "(3,3,2) gave j = " + std::to_string(smallest_power_j(3, 3, 2)) +
               ", reg = " + std::to_string(fiber_cone_regularity(3, 3, 2));
      return false;
    }
    return true;
  }});

  criteria.push_back({12, "small powers keep linear resolutions (includes cbounded(1,4,2,0) and cbounded(2,4,2,0), s <= 2)",
                      [](std::string& detail) {
    return suite_clean("linres-powers", GridBounds{}, 0, detail);
  }});

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(start);
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.label.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failures,
              criteria.size());
  return 1;
}
