#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspread/families.hpp"
#include "tspread/ideal.hpp"
#include "tspread/util.hpp"

namespace tspread {

/// Merge the index multisets of two equal-degree monomials into
/// i_1 <= ... <= i_{2d} and redistribute: odd positions to the first
/// component, even to the second. The product is preserved and the result
/// is a sorted pair.
std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v);

bool is_sorted_pair(const Monomial& u, const Monomial& v);

/// True iff every pair (tuple[i], tuple[j]) with i < j is sorted.
bool is_sorted_tuple(const std::vector<Monomial>& tuple);

/// Round-robin redistribution of the merged index multiset; the unique
/// sorted tuple with the same product.
std::vector<Monomial> sort_tuple(const std::vector<Monomial>& tuple);

struct SortClosureResult {
  bool closed = true;
  std::optional<std::pair<Monomial, Monomial>> counterexample;
};

/// Checks that sorting any pair of generators lands back in the generator
/// set. Works for any equigenerated ideal.
SortClosureResult verify_sortable(const MonomialIdeal& ideal,
                                  const Deadline* deadline = nullptr);
SortClosureResult verify_sortable(const CBounded& spec,
                                  const Deadline* deadline = nullptr);

struct ExchangeResult {
  bool ok = true;
  long long tuples = 0;  // sorted tuples enumerated
  std::string detail;    // first counterexample, when ok is false
};

/// Exchange test over sorted tuples of the given length (capped at 3; the
/// enumeration is exponential in the length). For an ordered pair of sorted
/// tuples whose products agree on x_1..x_{q-1} and differ upward at x_q,
/// some tuple member u must admit j > q in its support with
/// x_q * u / x_j back in the ideal. Rather than scanning tuple pairs, the
/// check enumerates, per tuple, the positions q at which a partner tuple
/// exists; the conclusion only depends on the tuple and q.
ExchangeResult verify_l_exchange(const MonomialIdeal& ideal, int tuple_len,
                                 const Deadline* deadline = nullptr);
ExchangeResult verify_l_exchange(const CBounded& spec, int tuple_len,
                                 const Deadline* deadline = nullptr);

struct QuadraticRelation {
  Monomial u, v;                 // unsorted pair, u lex-greater
  Monomial sorted_u, sorted_v;   // sort_pair(u, v)
};

/// x_i * u == x_j * v with i < j and v = x_i * u / x_j a generator; j is
/// the largest admissible choice, the smaller ones are kept as alternates.
struct LinearRelation {
  int i = 0;
  int j = 0;
  Monomial u, v;
  std::vector<int> alternates;
  /// Largest j whose double exchange x_i^2 * u / x_j^2 is also a generator;
  /// recorded to expose where this stricter reading differs.
  std::optional<int> literal_j;
};

struct ReesRelations {
  std::vector<QuadraticRelation> quadratic;
  std::vector<LinearRelation> linear;
  long long literal_divergences = 0;
};

ReesRelations rees_relations(const MonomialIdeal& ideal);
ReesRelations rees_relations(const CBounded& spec);

}  // namespace tspread
