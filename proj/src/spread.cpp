#include "tspread/spread.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tspread/rank.hpp"
#include "tspread/union_find.hpp"
#include "tspread/util.hpp"

namespace tspread {

RelationGraph relation_graph(const MonomialIdeal& ideal) {
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("relation_graph: not equigenerated");
  RelationGraph graph;
  graph.ambient = ideal.ambient;
  if (ideal.size() < 2) return graph;

  MonomialSet gset = generator_set(ideal);
  std::set<std::pair<int, int>> edges;
  for (const Monomial& u : ideal.gens) {
    for (int j : support(u)) {
      for (int i = 1; i <= ideal.ambient; ++i) {
        if (i == j) continue;
        if (gset.count(exchange(u, i, j)))
          edges.insert({std::min(i, j), std::max(i, j)});
      }
    }
  }
  graph.edges.assign(edges.begin(), edges.end());

  std::set<int> vertex_set;
  for (auto [i, j] : graph.edges) {
    vertex_set.insert(i);
    vertex_set.insert(j);
  }
  graph.vertices.assign(vertex_set.begin(), vertex_set.end());

  std::map<int, std::size_t> slot;
  for (std::size_t s = 0; s < graph.vertices.size(); ++s)
    slot[graph.vertices[s]] = s;
  UnionFind uf(graph.vertices.size());
  for (auto [i, j] : graph.edges) uf.unite(slot[i], slot[j]);
  std::map<std::size_t, std::vector<int>> groups;
  for (int v : graph.vertices) groups[uf.find(slot[v])].push_back(v);
  for (auto& [root, members] : groups)
    graph.components.push_back(std::move(members));
  std::sort(graph.components.begin(), graph.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return graph;
}

int analytic_spread_graph(const RelationGraph& graph) {
  return static_cast<int>(graph.vertices.size()) -
         static_cast<int>(graph.components.size()) + 1;
}

int analytic_spread_graph(const MonomialIdeal& ideal) {
  return analytic_spread_graph(relation_graph(ideal));
}

int exponent_span_rank(const MonomialIdeal& ideal) {
  std::vector<std::vector<int>> rows;
  rows.reserve(ideal.size());
  for (const Monomial& u : ideal.gens) rows.push_back(u.exponents);
  return rank_exact_rows(rows);
}

std::vector<std::pair<int, int>> coordinate_intervals(const CBounded& spec) {
  if (!family_nonempty(spec))
    throw std::invalid_argument("coordinate_intervals: family is empty");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= spec.d; ++i)
    out.emplace_back(cover_min_position(spec, i), cover_max_position(spec, i));
  return out;
}

DeltaProfile delta_profile(int d, int c) {
  if (d < 2) throw std::invalid_argument("delta_profile: d must be >= 2");
  if (c < 1) throw std::invalid_argument("delta_profile: c must be >= 1");
  DeltaProfile profile;
  profile.r = d - floor_div(d - 1, c) * c;
  for (int i = 1; i <= d - 1; ++i)
    profile.deltas.push_back(floor_div(i, c) - ceil_div(i - profile.r, c));
  profile.delta_min =
      *std::min_element(profile.deltas.begin(), profile.deltas.end());
  profile.delta_max =
      *std::max_element(profile.deltas.begin(), profile.deltas.end());
  return profile;
}

std::string to_string(SpreadCase c) {
  switch (c) {
    case SpreadCase::One: return "i";
    case SpreadCase::Two: return "ii";
    default: return "iii";
  }
}

namespace {

long long literal_case3_vertices(const CBounded& spec, int k, int r) {
  // Evaluated exactly as written, extending the position formulas to every
  // integer index and pinning index -1 of the upper sequence to 0. Known to
  // leave [1, d] for many parameters; kept for side-by-side reporting only.
  auto upper = [&](int i) -> long long {
    if (i == -1) return 0;
    return cover_max_position(spec, i);
  };
  long long total = spec.n;
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= r + 1; ++i) {
      int idx = j * spec.c + i;
      total -= cover_min_position(spec, idx) - upper(idx - 1) + 1;
    }
  int tail = k * spec.c + r + 1;
  total -= cover_min_position(spec, tail) - upper(tail - 1) + 1;
  return total;
}

}  // namespace

SpreadResult analytic_spread(const CBounded& spec) {
  if (!family_nonempty(spec))
    throw std::invalid_argument("analytic_spread: family is empty");
  SpreadResult result;
  result.graph_value = analytic_spread_graph(generators(spec));

  if (spec.d == 1) {
    // Generated by variables; the relation graph is complete on [1, n].
    result.case_tag = SpreadCase::Two;
    result.raw_closed_value = spec.n;
  } else {
    DeltaProfile delta = delta_profile(spec.d, spec.c);
    int k = floor_div(spec.d - 1, spec.c);
    int r = delta.r;
    int a1 = spec.n - k - spec.t * (spec.d - 1);
    result.r_equals_c = (r == spec.c);
    if (a1 < spec.t + 1 + delta.delta_min) {
      result.case_tag = SpreadCase::One;
      long long nd = static_cast<long long>(spec.n) * spec.d;
      result.raw_closed_value =
          nd - static_cast<long long>(spec.d) * (spec.d - 1) * spec.t -
          static_cast<long long>(k) * (k - 1) * spec.c - 2LL * r * k -
          spec.d + 1;
    } else if (a1 >= spec.t + 1 + delta.delta_max) {
      result.case_tag = SpreadCase::Two;
      result.raw_closed_value = spec.n;
    } else {
      result.case_tag = SpreadCase::Three;
      if (r == spec.c) {
        result.raw_closed_value = spec.n - (k + 1) + 1;
      } else {
        result.literal_case3_value =
            literal_case3_vertices(spec, k, r) - (r + 1LL) * k;
      }
    }
  }

  if (result.raw_closed_value) {
    result.closed_value = *result.raw_closed_value;
    result.discrepancy = (result.closed_value != result.graph_value);
    if (result.discrepancy) result.closed_value = result.graph_value;
  } else {
    // No trustworthy literal form: ship the graph value.
    result.closed_value = result.graph_value;
  }
  return result;
}

int limit_depth(const CBounded& spec) {
  return spec.n - static_cast<int>(analytic_spread(spec).closed_value);
}

}  // namespace tspread
