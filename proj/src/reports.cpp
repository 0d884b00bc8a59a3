#include "tspread/reports.hpp"

#include <chrono>

#include "tspread/block_type.hpp"
#include "tspread/linear_quotients.hpp"
#include "tspread/oracle.hpp"
#include "tspread/sorting.hpp"
#include "tspread/spread.hpp"

namespace tspread {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json base_report(const std::string& command) {
  Json report;
  report["schema"] = "1";
  report["command"] = command;
  report["results"] = Json::object();
  report["discrepancies"] = Json::array();
  report["timings_ms"] = Json::object();
  return report;
}

Json gens_strings(const MonomialIdeal& ideal) {
  Json arr = Json::array();
  for (const Monomial& g : ideal.gens) arr.push_back(to_string(g));
  return arr;
}

}  // namespace

Json spec_json(const IdealSpec& spec) {
  Json out;
  if (const auto* c = std::get_if<CBounded>(&spec)) {
    out["family"] = "cbounded";
    out["c"] = c->c;
    out["n"] = c->n;
    out["d"] = c->d;
    out["t"] = c->t;
  } else if (const auto* b = std::get_if<BlockType>(&spec)) {
    out["family"] = "blocktype";
    out["n"] = b->n;
    out["d"] = b->d;
    out["t"] = b->t;
    out["k"] = b->k;
  } else {
    const auto& v = std::get<VeroneseType>(spec);
    out["family"] = "veronese";
    out["n"] = v.n;
    out["d"] = v.d;
    out["bounds"] = v.bounds;
  }
  return out;
}

Json gens_report(const IdealSpec& spec, bool verify) {
  Json report = base_report("gens");
  report["spec"] = spec_json(spec);
  Stopwatch watch;
  MonomialIdeal ideal = generators(spec);
  report["results"]["count"] = ideal.size();
  report["results"]["generators"] = gens_strings(ideal);
  report["timings_ms"]["gens"] = watch.ms();
  if (verify) {
    Stopwatch vwatch;
    // Sanity pass: emitted generators must satisfy the family predicates.
    bool ok = true;
    if (const auto* c = std::get_if<CBounded>(&spec)) {
      for (const Monomial& g : ideal.gens) {
        Multiset a = multiset_of(g);
        if (g.degree() != c->d || !is_t_spread(a, c->t) ||
            !is_c_bounded(a, c->t, c->c)) {
          ok = false;
          report["discrepancies"].push_back(
              {{"kind", "generator-predicate"}, {"generator", to_string(g)}});
        }
      }
    }
    report["results"]["verified"] = ok;
    report["timings_ms"]["verify"] = vwatch.ms();
  }
  return report;
}

Json betti_report(const CBounded& spec, bool oracle) {
  Json report = base_report("betti");
  report["spec"] = spec_json(spec);
  Stopwatch watch;
  std::vector<long long> formula = betti_numbers(spec);
  Json result;
  result["values"] = formula;
  result["method"] = "closed-form";
  result["projective_dimension"] = formula.size() - 1;
  result["regularity"] = regularity_cbounded(spec);
  report["timings_ms"]["formula"] = watch.ms();
  if (oracle) {
    Stopwatch owatch;
    BettiTable table = betti_table(generators(spec));
    Json rows = Json::array();
    bool agree = true;
    for (std::size_t i = 0; i < formula.size(); ++i) {
      long long total = table.total(static_cast<int>(i));
      rows.push_back(total);
      if (total != formula[i]) agree = false;
    }
    if (table.projective_dimension() != static_cast<int>(formula.size()) - 1)
      agree = false;
    result["oracle_row_sums"] = rows;
    result["oracle_agrees"] = agree;
    result["method"] = "closed-form+oracle";
    if (!agree)
      report["discrepancies"].push_back({{"kind", "betti-formula-vs-oracle"},
                                         {"params", describe(spec)}});
    report["timings_ms"]["oracle"] = owatch.ms();
  }
  report["results"]["betti"] = result;
  return report;
}

Json spread_report(const CBounded& spec, const std::string& method) {
  Json report = base_report("spread");
  report["spec"] = spec_json(IdealSpec{spec});
  Json result;
  if (method == "graph") {
    Stopwatch watch;
    result["value"] = analytic_spread_graph(generators(spec));
    result["method"] = "graph";
    report["timings_ms"]["graph"] = watch.ms();
  } else {
    Stopwatch watch;
    SpreadResult res = analytic_spread(spec);
    result["value"] = res.closed_value;
    result["method"] = method == "closed" ? "closed-form" : "both";
    result["graph"] = res.graph_value;
    result["case"] = to_string(res.case_tag);
    result["r_equals_c"] = res.r_equals_c;
    if (res.raw_closed_value) result["closed_form"] = *res.raw_closed_value;
    if (res.literal_case3_value)
      result["literal_case3"] = *res.literal_case3_value;
    result["limit_depth"] = spec.n - res.closed_value;
    if (res.discrepancy)
      report["discrepancies"].push_back(
          {{"kind", "spread-closed-vs-graph"},
           {"params", describe(spec)},
           {"closed", *res.raw_closed_value},
           {"graph", res.graph_value}});
    report["timings_ms"]["spread"] = watch.ms();
  }
  report["results"]["spread"] = result;
  return report;
}

Json toric_report(const CBounded& spec, bool relations, int max_tuple,
                  bool verify) {
  Json report = base_report("toric");
  report["spec"] = spec_json(IdealSpec{spec});
  if (relations) {
    Stopwatch watch;
    ReesRelations rels = rees_relations(spec);
    Json arr = Json::array();
    for (const QuadraticRelation& q : rels.quadratic) {
      arr.push_back({{"kind", "quadratic-sorting"},
                     {"lhs", "t[" + to_string(q.u) + "]*t[" + to_string(q.v) +
                                 "]"},
                     {"rhs", "t[" + to_string(q.sorted_u) + "]*t[" +
                                 to_string(q.sorted_v) + "]"}});
    }
    for (const LinearRelation& l : rels.linear) {
      Json rec = {{"kind", "linear-exchange"},
                  {"lhs", "x" + std::to_string(l.i) + "*t[" + to_string(l.u) +
                              "]"},
                  {"rhs", "x" + std::to_string(l.j) + "*t[" + to_string(l.v) +
                              "]"}};
      if (l.alternates.size() > 1) rec["alternate_j"] = l.alternates;
      if (l.literal_j) rec["literal_j"] = *l.literal_j;
      arr.push_back(rec);
    }
    report["results"]["relations"] = arr;
    report["results"]["quadratic_count"] = rels.quadratic.size();
    report["results"]["linear_count"] = rels.linear.size();
    report["results"]["literal_divergences"] = rels.literal_divergences;
    report["timings_ms"]["relations"] = watch.ms();
  }
  if (verify) {
    Stopwatch watch;
    SortClosureResult closure = verify_sortable(spec);
    ExchangeResult exchange = verify_l_exchange(spec, max_tuple);
    report["results"]["sortable"] = closure.closed;
    report["results"]["l_exchange"] = exchange.ok;
    report["results"]["sorted_tuples"] = exchange.tuples;
    if (!closure.closed)
      report["discrepancies"].push_back(
          {{"kind", "sortable"}, {"params", describe(spec)}});
    if (!exchange.ok)
      report["discrepancies"].push_back({{"kind", "l-exchange"},
                                         {"params", describe(spec)},
                                         {"detail", exchange.detail}});
    report["timings_ms"]["verify"] = watch.ms();
  }
  return report;
}

Json blocktype_report(int n, int d, int k, const std::string& what, int s) {
  Json report = base_report("blocktype");
  report["spec"] = spec_json(IdealSpec{BlockType{n, d, 0, k}});
  Stopwatch watch;
  if (what == "reg") {
    report["results"]["regularity"] = regularity_blocktype(n, d, k);
    report["results"]["method"] = "closed-form";
  } else if (what == "socle") {
    SoclePoint socle = top_socle_point(generators(BlockType{n, d, 0, k}));
    report["results"]["top_socle_degree"] = socle.degree;
    report["results"]["socle_point"] = to_string(socle.point);
    report["results"]["method"] = "search";
  } else if (what == "j") {
    report["results"]["smallest_power"] = smallest_power_j(n, d, k);
  } else if (what == "fiber-reg") {
    report["results"]["fiber_cone_regularity"] = fiber_cone_regularity(n, d, k);
  } else if (what == "power-check") {
    report["results"]["s"] = s;
    report["results"]["power_equals_mpower"] = power_equals_mpower(n, d, k, s);
  } else {
    throw std::invalid_argument("unknown blocktype question: " + what);
  }
  report["timings_ms"][what] = watch.ms();
  return report;
}

Json oracle_report(const std::string& what, const MonomialIdeal& ideal) {
  Json report = base_report("oracle");
  report["spec"] = {{"family", "file"},
                    {"n", ideal.ambient},
                    {"generators", ideal.size()}};
  Stopwatch watch;
  if (what == "height") {
    report["results"]["height"] = height_oracle(ideal);
  } else {
    BettiTable table = betti_table(ideal);
    if (what == "betti") {
      Json entries = Json::array();
      for (const auto& [key, value] : table.entries)
        entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", value}});
      report["results"]["betti_table"] = entries;
      report["results"]["projective_dimension"] = table.projective_dimension();
    } else if (what == "depth") {
      report["results"]["depth_quotient"] = depth_quotient(table);
    } else if (what == "reg") {
      report["results"]["regularity_ideal"] = reg_ideal(table);
      report["results"]["regularity_quotient"] = reg_quotient(table);
      if (is_equigenerated(ideal) && !ideal.empty())
        report["results"]["linear_resolution"] =
            has_linear_resolution(table, generator_degree(ideal));
    } else {
      throw std::invalid_argument("unknown oracle question: " + what);
    }
  }
  report["timings_ms"][what] = watch.ms();
  return report;
}

Json suite_json(const SuiteReport& suite, bool full) {
  Json out;
  out["suite"] = suite.suite;
  out["points"] = suite.points;
  out["passed"] = suite.passed;
  out["failed"] = suite.failed;
  out["skipped"] = suite.skipped;
  out["elapsed_ms"] = suite.elapsed_ms;
  auto outcome_json = [](const PointOutcome& p) {
    return Json{{"params", p.params},
                {"pass", p.pass},
                {"skipped", p.skipped},
                {"detail", p.detail}};
  };
  Json failures = Json::array();
  for (const PointOutcome& p : suite.failures) {
    failures.push_back(outcome_json(p));
    if (!full && failures.size() >= 1) break;  // first failure always kept
  }
  out["failures"] = failures;
  if (full) {
    Json skips = Json::array();
    for (const PointOutcome& p : suite.skips) skips.push_back(outcome_json(p));
    out["skips"] = skips;
  }
  Json notes = Json::array();
  for (const PointOutcome& p : suite.notes) notes.push_back(outcome_json(p));
  out["notes"] = notes;
  return out;
}

namespace {

void render_lines(const Json& value, const std::string& prefix,
                  std::string& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items())
      render_lines(child, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array()) {
    if (value.empty()) {
      out += prefix + " = []\n";
      return;
    }
    bool scalar = true;
    for (const auto& child : value)
      if (child.is_object() || child.is_array()) scalar = false;
    if (scalar) {
      out += prefix + " =";
      for (const auto& child : value) out += " " + child.dump();
      out += "\n";
    } else {
      int idx = 0;
      for (const auto& child : value)
        render_lines(child, prefix + "[" + std::to_string(idx++) + "]", out);
    }
  } else {
    out += prefix + " = " + value.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render_lines(report, "", out);
  return out;
}

}  // namespace tspread
