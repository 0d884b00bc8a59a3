#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspread/families.hpp"
#include "tspread/ideal.hpp"
#include "tspread/util.hpp"

namespace tspread {

/// Integer intervals attached to a generator, one per block (0th comes
/// before the first block). [lo, hi] with lo > hi is empty and contributes
/// nothing to the union.
struct GapIntervalProfile {
  std::vector<std::pair<int, int>> intervals;
};

/// Pre: u is a generator of the family described by spec.
GapIntervalProfile gap_intervals(const Monomial& u, const CBounded& spec);

/// Indices i such that x_i lies in ((lex-greater generators) : u), computed
/// as the union of the gap intervals. Ascending.
std::vector<int> quotient_set(const Monomial& u, const CBounded& spec);

/// Same set for the stretched generator, computed by the index-transfer
/// rule b = a + max{j : i_j <= a} (max of the empty set is 0) instead of
/// from the stretched family's gap intervals.
std::vector<int> quotient_set_stretched(const Monomial& u,
                                        const CBounded& spec);

struct LinearQuotientsResult {
  bool ok = true;
  std::optional<Monomial> failing_generator;
  std::string detail;
};

/// Orders the generators lex-descending and checks, through the brute-force
/// colon computation, that each prefix colon is generated by variables.
LinearQuotientsResult verify_linear_quotients(const MonomialIdeal& ideal,
                                              const Deadline* deadline = nullptr);

/// As above, and additionally checks that the colon variables of each
/// generator equal its quotient_set. The two sides are computed through
/// unrelated code paths.
LinearQuotientsResult verify_linear_quotients(const CBounded& spec,
                                              const Deadline* deadline = nullptr);

/// beta_i = sum over generators of C(|quotient_set|, i). Index 0 is the
/// number of generators.
std::vector<long long> betti_numbers(const CBounded& spec);

/// max |quotient_set(u)| over the generators.
int projective_dimension(const CBounded& spec);

/// The resolution is d-linear, so the regularity is the generator degree.
int regularity_cbounded(const CBounded& spec);

}  // namespace tspread
