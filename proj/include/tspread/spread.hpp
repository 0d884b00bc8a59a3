#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspread/families.hpp"
#include "tspread/ideal.hpp"

namespace tspread {

/// Undirected graph on a subset of [1, n]: {i, j} is an edge when
/// x_i * u = x_j * v for generators u, v. Vertices are edge endpoints;
/// indices meeting no edge are not vertices.
struct RelationGraph {
  int ambient = 0;
  std::vector<int> vertices;                 // ascending
  std::vector<std::pair<int, int>> edges;    // i < j, sorted
  std::vector<std::vector<int>> components;  // ascending vertex lists
};

/// Pre: ideal equigenerated.
RelationGraph relation_graph(const MonomialIdeal& ideal);

/// |vertices| - #components + 1; 1 for the edgeless graph. For an
/// equigenerated ideal whose syzygies are generated in degree one this is
/// the analytic spread.
int analytic_spread_graph(const MonomialIdeal& ideal);
int analytic_spread_graph(const RelationGraph& graph);

/// Rank of the rational span of the generators' exponent vectors; the same
/// number as analytic_spread_graph, computed by exact elimination.
int exponent_span_rank(const MonomialIdeal& ideal);

/// [cover_min_position(i), cover_max_position(i)] for i = 1..d. The union
/// of complete graphs on these intervals models the relation graph: same
/// component count and vertex count whenever no variable divides every
/// generator; otherwise each degenerate single-point interval adds one
/// isolated vertex and one component to the model, leaving the spread value
/// unchanged.
std::vector<std::pair<int, int>> coordinate_intervals(const CBounded& spec);

/// delta_i = floor(i/c) - ceil((i-r)/c) for i = 1..d-1, where
/// r = d - floor((d-1)/c) * c. The extrema are taken over the computed
/// list.
struct DeltaProfile {
  int r = 0;
  std::vector<int> deltas;
  int delta_min = 0;
  int delta_max = 0;
};

DeltaProfile delta_profile(int d, int c);  // pre: d >= 2, c >= 1

enum class SpreadCase { One, Two, Three };

std::string to_string(SpreadCase c);

struct SpreadResult {
  long long graph_value = 0;
  long long closed_value = 0;  // after the case-three fallback below
  SpreadCase case_tag = SpreadCase::Two;
  bool r_equals_c = false;
  /// Raw closed-form value before any fallback; absent in the case where
  /// the formula has no trustworthy literal form (case three with r < c).
  std::optional<long long> raw_closed_value;
  /// Literal evaluation of the case-three r < c vertex-count expression,
  /// with out-of-range indices extended by the defining formulas and the
  /// index -1 pinned to 0. Reported, never shipped.
  std::optional<long long> literal_case3_value;
  bool discrepancy = false;  // raw closed form disagreed with the graph
};

/// Closed-form analytic spread with the relation-graph value computed
/// alongside; on disagreement the graph value is shipped in closed_value
/// and the discrepancy flag is set. Pre: family nonempty.
SpreadResult analytic_spread(const CBounded& spec);

/// n - analytic spread: the eventual value of depth of the quotient by
/// large powers. Zero iff the relation graph is connected.
int limit_depth(const CBounded& spec);

}  // namespace tspread
