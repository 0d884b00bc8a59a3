// Command-line front door: family construction, invariants, verification
// suites, grid sweeps and exports. Emits one JSON report per run (or text /
// external-CAS script); exits 0 on success, 2 when a cross-check disagrees,
// 1 on usage or parameter errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tspread/families.hpp"
#include "tspread/io.hpp"
#include "tspread/reports.hpp"
#include "tspread/suites.hpp"

namespace {

using tspread::Json;

struct FamilyFlags {
  std::string family = "cbounded";
  int c = 0, n = 0, d = 0, t = 0, k = 0;
  std::vector<int> bounds;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool cbounded_only) {
  if (cbounded_only)
    cmd->add_option("--family", flags.family)
        ->check(CLI::IsMember({"cbounded"}))
        ->capture_default_str();
  else
    cmd->add_option("--family", flags.family)
        ->check(CLI::IsMember({"cbounded", "blocktype", "veronese"}))
        ->capture_default_str();
  cmd->add_option("--c", flags.c, "block size bound");
  cmd->add_option("--n", flags.n, "number of variables")->required();
  cmd->add_option("--d", flags.d, "generator degree")->required();
  cmd->add_option("--t", flags.t, "spread gap");
  cmd->add_option("--k", flags.k, "block count bound");
  cmd->add_option("--bounds", flags.bounds,
                  "per-variable exponent bounds (veronese)")
      ->delimiter(',');
}

tspread::IdealSpec spec_from_flags(const FamilyFlags& flags) {
  if (flags.family == "cbounded") {
    if (flags.c <= 0)
      throw std::invalid_argument("cbounded family needs --c >= 1");
    return tspread::CBounded{flags.c, flags.n, flags.d, flags.t};
  }
  if (flags.family == "blocktype") {
    if (flags.k <= 0)
      throw std::invalid_argument("blocktype family needs --k >= 1");
    return tspread::BlockType{flags.n, flags.d, flags.t, flags.k};
  }
  return tspread::VeroneseType{flags.n, flags.d, flags.bounds};
}

tspread::CBounded cbounded_from_flags(const FamilyFlags& flags) {
  return std::get<tspread::CBounded>(spec_from_flags(flags));
}

int emit(const Json& report, const std::string& format) {
  if (format == "text")
    std::cout << tspread::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return report["discrepancies"].empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of restricted spread-and-support monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format sit before or after the subcommand

  FamilyFlags gens_flags, betti_flags, spread_flags, toric_flags;
  std::string format = "json";
  app.add_option("--format", format)
      ->check(CLI::IsMember({"json", "text", "singular"}))
      ->capture_default_str();

  auto* gens = app.add_subcommand("gens", "list the minimal generators");
  add_family_flags(gens, gens_flags, false);
  bool gens_verify = false;
  std::string gens_out;
  gens->add_flag("--verify", gens_verify, "re-check the family predicates");
  gens->add_option("--out", gens_out, "write output to a file");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  add_family_flags(betti, betti_flags, true);
  bool betti_oracle = false;
  betti->add_flag("--oracle", betti_oracle,
                  "cross-check against the homology oracle");
  bool betti_verify = false;
  betti->add_flag("--verify", betti_verify, "alias for --oracle");

  auto* spread = app.add_subcommand("spread", "analytic spread");
  add_family_flags(spread, spread_flags, true);
  std::string method = "both";
  spread->add_option("--method", method)
      ->check(CLI::IsMember({"graph", "closed", "both"}))
      ->capture_default_str();
  std::string spread_report_path;
  spread->add_option("--report", spread_report_path,
                     "write the discrepancy report to a file");

  auto* toric = app.add_subcommand("toric", "fiber and Rees relations");
  add_family_flags(toric, toric_flags, true);
  bool toric_relations = false;
  bool toric_verify = false;
  int max_tuple = 2;
  toric->add_flag("--relations", toric_relations, "emit the relation list");
  toric->add_flag("--verify", toric_verify,
                  "run the sortedness and exchange checks");
  toric->add_option("--max-tuple", max_tuple, "tuple length for the checks")
      ->check(CLI::Range(1, 3));

  auto* blocktype = app.add_subcommand("blocktype",
                                       "support-bounded family invariants");
  int bt_n = 0, bt_d = 0, bt_k = 0, bt_s = 1;
  std::string bt_what = "reg";
  blocktype->add_option("--n", bt_n)->required();
  blocktype->add_option("--d", bt_d)->required();
  blocktype->add_option("--k", bt_k)->required();
  blocktype->add_option("--what", bt_what)
      ->check(CLI::IsMember({"reg", "socle", "j", "fiber-reg", "power-check"}))
      ->capture_default_str();
  blocktype->add_option("--s", bt_s, "power for power-check");

  auto* oracle = app.add_subcommand("oracle", "brute-force invariants of an "
                                              "ideal read from a file");
  oracle->require_subcommand(1);
  std::string gens_file;
  int oracle_n = 0;
  std::string oracle_what;
  for (const char* what : {"betti", "height", "depth", "reg"}) {
    auto* sub = oracle->add_subcommand(what);
    sub->add_option("--gens-file", gens_file, "one monomial per line")
        ->required();
    sub->add_option("--n", oracle_n, "ring size (default: largest index)");
    sub->callback([&oracle_what, what]() { oracle_what = what; });
  }

  tspread::GridBounds bounds;
  double timeout_secs = 0.0;
  bool serial = false;
  std::string suite_name, sweep_report_path;
  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--suite", suite_name)
        ->check(CLI::IsMember(tspread::suite_names()))
        ->required();
    cmd->add_option("--max-n", bounds.max_n)->capture_default_str();
    cmd->add_option("--max-d", bounds.max_d)->capture_default_str();
    cmd->add_option("--max-c", bounds.max_c,
                    "0 means up to the degree")->capture_default_str();
    cmd->add_option("--max-t", bounds.max_t)->capture_default_str();
    cmd->add_option("--timeout-secs", timeout_secs,
                    "per-point budget; expired points are skipped");
    cmd->add_flag("--serial", serial, "disable the worker pool");
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_grid_flags(verify);
  auto* sweep = app.add_subcommand("sweep", "run a suite and keep every "
                                            "per-point record");
  add_grid_flags(sweep);
  sweep->add_option("--report", sweep_report_path,
                    "write the full report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gens->parsed()) {
      tspread::IdealSpec spec = spec_from_flags(gens_flags);
      if (format == "singular") {
        std::string script = tspread::singular_script(tspread::generators(spec));
        if (gens_out.empty())
          std::cout << script;
        else
          tspread::write_file(gens_out, script);
        return 0;
      }
      Json report = tspread::gens_report(spec, gens_verify);
      if (!gens_out.empty()) {
        tspread::write_file(gens_out, report.dump(2) + "\n");
        return report["discrepancies"].empty() ? 0 : 2;
      }
      return emit(report, format);
    }
    if (betti->parsed())
      return emit(tspread::betti_report(cbounded_from_flags(betti_flags),
                                        betti_oracle || betti_verify),
                  format);
    if (spread->parsed()) {
      Json report =
          tspread::spread_report(cbounded_from_flags(spread_flags), method);
      if (!spread_report_path.empty()) {
        Json side = {{"schema", "1"},
                     {"discrepancies", report["discrepancies"]},
                     {"spec", report["spec"]}};
        tspread::write_file(spread_report_path, side.dump(2) + "\n");
      }
      return emit(report, format);
    }
    if (toric->parsed())
      return emit(tspread::toric_report(cbounded_from_flags(toric_flags),
                                        toric_relations, max_tuple,
                                        toric_verify),
                  format);
    if (blocktype->parsed())
      return emit(tspread::blocktype_report(bt_n, bt_d, bt_k, bt_what, bt_s),
                  format);
    if (oracle->parsed()) {
      tspread::MonomialIdeal ideal =
          tspread::read_generators_file(gens_file, oracle_n);
      return emit(tspread::oracle_report(oracle_what, ideal), format);
    }
    if (verify->parsed() || sweep->parsed()) {
      tspread::SuiteReport report =
          tspread::run_suite(suite_name, bounds, timeout_secs, !serial);
      Json out;
      out["schema"] = "1";
      out["command"] = verify->parsed() ? "verify" : "sweep";
      out["results"] = tspread::suite_json(report, sweep->parsed());
      out["discrepancies"] = Json::array();
      for (const tspread::PointOutcome& p : report.failures)
        out["discrepancies"].push_back(
            {{"kind", "suite-failure"}, {"params", p.params},
             {"detail", p.detail}});
      out["timings_ms"] = {{"suite", report.elapsed_ms}};
      if (!sweep_report_path.empty())
        tspread::write_file(sweep_report_path, out.dump(2) + "\n");
      return emit(out, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
