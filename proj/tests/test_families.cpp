#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "oracles.hpp"
#include "tspread/families.hpp"
#include "tspread/linear_quotients.hpp"
#include "tspread/oracle.hpp"
#include "tspread/util.hpp"

using namespace tspread;

namespace {

std::vector<std::string> gen_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const Monomial& g : ideal.gens) out.push_back(to_string(g));
  return out;
}

bool lex_descending(const MonomialIdeal& ideal) {
  for (std::size_t i = 1; i < ideal.gens.size(); ++i)
    if (!lex_greater(ideal.gens[i - 1], ideal.gens[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("squarefree case lists every support pair") {
  MonomialIdeal ideal = generators(CBounded{1, 4, 2, 0});
  CHECK(gen_strings(ideal) == std::vector<std::string>{"x1*x2", "x1*x3",
                                                       "x1*x4", "x2*x3",
                                                       "x2*x4", "x3*x4"});
}

TEST_CASE("single-block support family is the pure powers") {
  MonomialIdeal ideal = generators(BlockType{3, 4, 0, 1});
  CHECK(gen_strings(ideal) ==
        std::vector<std::string>{"x1^4", "x2^4", "x3^4"});
}

TEST_CASE("membership example") {
  MonomialIdeal ideal = generators(CBounded{3, 5, 6, 0});
  Monomial u = parse_monomial("x1^3*x3^2*x5", 5);
  CHECK(std::find(ideal.gens.begin(), ideal.gens.end(), u) !=
        ideal.gens.end());
}

TEST_CASE("enumeration agrees with filter-everything oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d)
      for (int t = 0; t <= 2; ++t) {
        for (int c = 1; c <= d; ++c) {
          CBounded spec{c, n, d, t};
          MonomialIdeal fast = generators(spec);
          CHECK(lex_descending(fast));
          CHECK(equals(fast, testoracle::filter_family(spec)));
        }
        for (int k = 1; k <= n; ++k) {
          BlockType spec{n, d, t, k};
          MonomialIdeal fast = generators(spec);
          CHECK(lex_descending(fast));
          CHECK(equals(fast, testoracle::filter_family(spec)));
        }
      }
}

TEST_CASE("exponent-bounded family matches the block view at t = 0") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 2; d <= 4; ++d)
      for (int c = 1; c < d; ++c) {
        VeroneseType bounded{n, d, std::vector<int>(n, c)};
        if (static_cast<long long>(n) * c <= d) continue;  // invalid shape
        CHECK(equals(generators(bounded), generators(CBounded{c, n, d, 0})));
      }
  CHECK_THROWS_AS(generators(VeroneseType{3, 4, {2, 2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generators(VeroneseType{2, 4, {2, 2}}),
                  std::invalid_argument);  // degree not below the bound sum
}

TEST_CASE("empty families come back empty, not as errors") {
  CHECK(generators(CBounded{1, 3, 3, 2}).empty());  // needs indices up to 7
  CHECK(generators(BlockType{3, 3, 2, 2}).empty());
  CHECK_FALSE(family_nonempty(CBounded{1, 3, 3, 2}));
  CHECK(family_nonempty(CBounded{3, 12, 4, 3}));
  CHECK(family_nonempty(CBounded{2, 1, 1, 5}));  // d = 1 only needs one index
}

TEST_CASE("generator count formula") {
  CHECK(generator_count_blocktype(4, 2, 2) == 10);
  CHECK(generator_count_blocktype(3, 3, 2) == 9);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 6; ++d) {
      CHECK(generator_count_blocktype(n, d, n) == binomial(n + d - 1, d));
      for (int k = 1; k <= n; ++k)
        CHECK(generator_count_blocktype(n, d, k) ==
              static_cast<long long>(generators(BlockType{n, d, 0, k}).size()));
    }
  }
}

TEST_CASE("cover-order extremes") {
  CBounded spec{3, 12, 4, 3};
  CHECK(to_string(cover_max_generator(spec)) == "x2*x6*x9*x12");
  CHECK(to_string(cover_min_generator(spec)) == "x1*x4*x7*x11");

  SUBCASE("extremes are the lex extremes of the generator list") {
    for (CBounded s : {CBounded{3, 12, 4, 3}, CBounded{2, 7, 5, 1},
                       CBounded{2, 6, 4, 0}, CBounded{1, 5, 3, 1},
                       CBounded{4, 9, 6, 1}}) {
      MonomialIdeal ideal = generators(s);
      REQUIRE_FALSE(ideal.empty());
      CHECK(cover_min_generator(s) == ideal.gens.front());
      CHECK(cover_max_generator(s) == ideal.gens.back());
    }
  }

  SUBCASE("c >= d at t = 0 pins the minimum to the first pure power") {
    CHECK(to_string(cover_min_generator(CBounded{4, 6, 4, 0})) == "x1^4");
  }

  SUBCASE("c = 1 with t = 1 forces gaps of at least two") {
    // Only {1,3,5} survives in five variables at degree three.
    MonomialIdeal ideal = generators(CBounded{1, 5, 3, 1});
    CHECK(gen_strings(ideal) == std::vector<std::string>{"x1*x3*x5"});
    CHECK(cover_min_generator(CBounded{1, 5, 3, 1}) ==
          parse_monomial("x1*x3*x5", 5));
    CHECK(cover_max_generator(CBounded{1, 5, 3, 1}) ==
          parse_monomial("x1*x3*x5", 5));
  }

  CHECK_THROWS_AS(cover_max_generator(CBounded{1, 3, 3, 2}),
                  std::invalid_argument);
}

TEST_CASE("height closed form") {
  CHECK(height_cbounded(CBounded{1, 4, 2, 0}) == 3);
  CHECK(height_cbounded(CBounded{3, 12, 4, 3}) == 2);
  for (int n = 2; n <= 6; ++n)  // c >= d at t = 0 is a maximal-ideal power
    CHECK(height_cbounded(CBounded{n, n, 3 < n ? 3 : n, 0}) == n);

  SUBCASE("agrees with the cover oracle and the last-variable rule") {
    for (int n = 1; n <= 7; ++n)
      for (int d = 1; d <= 4; ++d)
        for (int c = 1; c <= d; ++c)
          for (int t = 0; t <= 2; ++t) {
            CBounded spec{c, n, d, t};
            if (!family_nonempty(spec)) continue;
            MonomialIdeal ideal = generators(spec);
            int closed = height_cbounded(spec);
            CHECK(closed == height_oracle(ideal));
            int max_min = 0;
            for (const Monomial& g : ideal.gens)
              max_min = std::max(max_min, min_index(g));
            CHECK(closed == max_min);
          }
  }
}

TEST_CASE("Cohen-Macaulay and Gorenstein classification") {
  CHECK(is_cohen_macaulay(CBounded{1, 6, 3, 1}));      // c = 1
  CHECK(is_cohen_macaulay(CBounded{3, 5, 3, 0}));      // d <= c
  CHECK(is_gorenstein(CBounded{2, 7, 1, 3}));          // d = 1
  CHECK_FALSE(is_cohen_macaulay(CBounded{2, 9, 6, 1}));
  CHECK_FALSE(is_gorenstein(CBounded{2, 5, 3, 0}));

  SUBCASE("height one does not mean principal") {
    // Two generators, height one, depth zero: not Cohen-Macaulay even
    // though n reaches the least-admissible-top-index bound.
    for (CBounded spec : {CBounded{2, 2, 3, 0}, CBounded{3, 2, 4, 0},
                          CBounded{2, 4, 3, 1}, CBounded{3, 5, 4, 1}}) {
      CHECK(height_cbounded(spec) == 1);
      CHECK(generators(spec).size() > 1);
      CHECK_FALSE(is_principal_cbounded(spec));
      CHECK_FALSE(is_cohen_macaulay(spec));
      CHECK_FALSE(is_gorenstein(spec));
    }
  }

  SUBCASE("principality closed form counts to one") {
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= 4; ++d)
        for (int c = 1; c <= d; ++c)
          for (int t = 0; t <= 2; ++t) {
            CBounded spec{c, n, d, t};
            if (!family_nonempty(spec)) continue;
            CHECK(is_principal_cbounded(spec) ==
                  (generators(spec).size() == 1));
          }
  }

  SUBCASE("matches depth = dimension computed from two closed forms") {
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= 4; ++d)
        for (int c = 1; c <= d; ++c)
          for (int t = 0; t <= 1; ++t) {
            CBounded spec{c, n, d, t};
            if (!family_nonempty(spec)) continue;
            bool reference = projective_dimension(spec) + 1 ==
                             height_cbounded(spec);
            CHECK(is_cohen_macaulay(spec) == reference);
          }
  }

  SUBCASE("small oracle spot checks via the Betti table") {
    for (CBounded spec : {CBounded{1, 4, 2, 0}, CBounded{2, 5, 3, 0},
                          CBounded{2, 4, 3, 0}, CBounded{3, 4, 3, 0},
                          CBounded{2, 2, 3, 0}, CBounded{1, 5, 3, 1}}) {
      BettiTable table = betti_table(generators(spec));
      bool cm_oracle = table.projective_dimension() + 1 ==
                       height_oracle(generators(spec));
      CHECK(is_cohen_macaulay(spec) == cm_oracle);
      // Graded Gorenstein = Cohen-Macaulay of last total Betti number one.
      bool gor_oracle =
          cm_oracle && table.total(table.projective_dimension()) == 1;
      CHECK(is_gorenstein(spec) == gor_oracle);
    }
  }
}

TEST_CASE("stretching transports whole families") {
  for (int t = 1; t <= 2; ++t) {
    CBounded base{2, 4, 3, 0};
    CBounded lifted{2, 4 + (3 - 1) * t, 3, t};
    std::vector<Monomial> moved;
    for (const Monomial& g : generators(base).gens)
      moved.push_back(monomial_of(stretch_pow(multiset_of(g), t)));
    CHECK(equals(make_ideal(lifted.n, std::move(moved)), generators(lifted)));
  }
}

TEST_CASE("parameter validation messages") {
  CHECK_THROWS_AS(validate(CBounded{0, 4, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BlockType{3, 2, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate(VeroneseType{2, 2, {1, 2, 2}}),
                  std::invalid_argument);
  CHECK(describe(IdealSpec{CBounded{3, 12, 4, 3}}) ==
        "cbounded(c=3,n=12,d=4,t=3)");
}
