#pragma once

#include <string>

#include <json.hpp>

#include "tspread/families.hpp"
#include "tspread/suites.hpp"

namespace tspread {

using Json = nlohmann::json;

// Every command answers with one JSON document: schema marker, echo of the
// spec, a results object with method tags, a discrepancy array and per-step
// wall times. Exit code 2 is wired to a nonempty discrepancy array.

Json spec_json(const IdealSpec& spec);

Json gens_report(const IdealSpec& spec, bool verify);
Json betti_report(const CBounded& spec, bool oracle);
Json spread_report(const CBounded& spec, const std::string& method);
Json toric_report(const CBounded& spec, bool relations, int max_tuple,
                  bool verify);
Json blocktype_report(int n, int d, int k, const std::string& what, int s);
Json oracle_report(const std::string& what, const MonomialIdeal& ideal);
Json suite_json(const SuiteReport& report, bool full);

std::string render_text(const Json& report);

}  // namespace tspread
