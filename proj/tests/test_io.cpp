#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>

#include "tspread/io.hpp"
#include "tspread/reports.hpp"
#include "tspread/suites.hpp"

using namespace tspread;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path("tspread_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("external-CAS script format") {
  MonomialIdeal pair = make_ideal(
      3, {parse_monomial("x1*x2", 3), parse_monomial("x1*x3", 3)});
  CHECK(singular_script(pair) ==
        "ring R = 0, (x1,x2,x3), dp;\nideal I = x1*x2, x1*x3;\n");

  CHECK(singular_script(MonomialIdeal{2, {}}) ==
        "ring R = 0, (x1,x2), dp;\nideal I = 0;\n");

  MonomialIdeal ten = generators(BlockType{4, 2, 0, 2});
  CHECK(ten.size() == 10);
  std::string script = singular_script(ten);
  CHECK(script.find("ideal I = x1^2, x1*x2") != std::string::npos);
}

TEST_CASE("generator files round-trip") {
  TempFile file("gens.txt");
  MonomialIdeal ideal = generators(CBounded{2, 5, 3, 1});
  std::string body = "# comment line\n\n";
  for (const Monomial& g : ideal.gens) body += to_string(g) + "\n";
  write_file(file.path, body);

  MonomialIdeal reread = read_generators_file(file.path, 5);
  CHECK(equals(reread, ideal));

  SUBCASE("ambient inferred from the largest index") {
    MonomialIdeal inferred = read_generators_file(file.path);
    CHECK(inferred.ambient == 5);
    CHECK(equals(inferred, ideal));
  }

  CHECK_THROWS(read_generators_file("does_not_exist.txt"));
}

TEST_CASE("monomial text forms") {
  CHECK(to_string(parse_monomial("x1^2*x3*x5", 5)) == "x1^2*x3*x5");
  CHECK(to_string(unit_monomial(4)) == "1");
  CHECK(parse_monomial("1", 4) == unit_monomial(4));
  CHECK_THROWS_AS(parse_monomial("x0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1^0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1x2", 3), std::invalid_argument);
}

TEST_CASE("run reports") {
  Json spread = spread_report(CBounded{3, 12, 4, 3}, "both");
  CHECK(spread["schema"] == "1");
  CHECK(spread["results"]["spread"]["value"] == 7);
  CHECK(spread["discrepancies"].empty());

  SUBCASE("reports survive a serialize/parse round trip") {
    for (const Json& report :
         {spread, gens_report(IdealSpec{BlockType{3, 4, 0, 1}}, true),
          betti_report(CBounded{2, 5, 3, 1}, true),
          toric_report(CBounded{1, 3, 2, 0}, true, 2, true),
          blocktype_report(3, 3, 2, "fiber-reg", 1)}) {
      CHECK(Json::parse(report.dump()) == report);
      CHECK(Json::parse(report.dump(2)) == report);
    }
  }

  SUBCASE("gens report lists the family deterministically") {
    Json a = gens_report(IdealSpec{CBounded{1, 4, 2, 0}}, false);
    Json b = gens_report(IdealSpec{CBounded{1, 4, 2, 0}}, false);
    CHECK(a["results"]["generators"] == b["results"]["generators"]);
    CHECK(a["results"]["count"] == 6);
  }

  SUBCASE("text rendering covers every leaf") {
    std::string text = render_text(spread);
    CHECK(text.find("results.spread.value = 7") != std::string::npos);
    CHECK(text.find("schema = \"1\"") != std::string::npos);
  }
}

TEST_CASE("suite runner") {
  GridBounds tiny{4, 3, 0, 1};
  SuiteReport report = run_suite("sortable", tiny, 0.0, false);
  CHECK(report.ok());
  CHECK(report.points > 0);
  CHECK(report.failed == 0);

  SUBCASE("parallel and serial agree") {
    SuiteReport parallel = run_suite("height", tiny, 0.0, true);
    SuiteReport serial = run_suite("height", tiny, 0.0, false);
    CHECK(parallel.points == serial.points);
    CHECK(parallel.passed == serial.passed);
    CHECK(parallel.failed == serial.failed);
  }

  SUBCASE("json view round-trips") {
    Json view = suite_json(report, true);
    CHECK(Json::parse(view.dump()) == view);
    CHECK(view["failed"] == 0);
  }

  SUBCASE("tiny timeout records skips instead of failing the sweep") {
    SuiteReport rushed = run_suite("linear-quotients", GridBounds{6, 4, 0, 1},
                                   1e-9, false);
    CHECK(rushed.failed == 0);
    CHECK(rushed.skipped > 0);
    CHECK(rushed.skips.size() == static_cast<std::size_t>(rushed.skipped));
  }

  SUBCASE("an empty grid passes trivially") {
    SuiteReport empty = run_suite("spread", GridBounds{0, 0, 0, 0});
    CHECK(empty.ok());
    CHECK(empty.points == 0);
  }

  CHECK_THROWS_AS(run_suite("no-such-suite", tiny), std::invalid_argument);
}

TEST_CASE("suite batteries at their contract sizes") {
  // Third-path exchange scan against the gap intervals, |G| <= 200.
  SuiteReport gaps = run_suite("gap-soundness", GridBounds{7, 4, 0, 2});
  CHECK(gaps.failed == 0);
  CHECK(gaps.skipped == 0);

  // Unique sorted tuple per product, r <= 3 over |G| <= 30.
  SuiteReport unique = run_suite("sorted-uniqueness", GridBounds{6, 3, 0, 2});
  CHECK(unique.failed == 0);
  CHECK(unique.skipped == 0);

  // Graph value == exact exponent-span rank, |G| <= 500.
  SuiteReport rank = run_suite("rank-spread", GridBounds{10, 5, 0, 2});
  CHECK(rank.failed == 0);
  CHECK(rank.points > 100);

  // Closed-form classification against the homology oracle, |G| <= 60;
  // points beyond the homology budget only ever skip.
  SuiteReport cm = run_suite("cohen-macaulay", GridBounds{8, 4, 0, 2});
  CHECK(cm.failed == 0);

  // Closure and exchange hold out to the wider documented grid.
  SuiteReport closure = run_suite("sortable", GridBounds{10, 6, 0, 2});
  CHECK(closure.failed == 0);
  CHECK(closure.skipped == 0);
  SuiteReport exchange = run_suite("l-exchange", GridBounds{10, 6, 0, 2});
  CHECK(exchange.failed == 0);
  CHECK(exchange.skipped == 0);
}
