#include "tspread/sorting.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

namespace {

void require_pair_shape(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("sort_pair: ambient mismatch");
  if (u.degree() != v.degree())
    throw std::invalid_argument("sort_pair: degrees differ");
}

// The merged index stream visits the variables in order; of the
// u_i + v_i copies of x_i, the first component takes every other one,
// starting on the parity of the count already consumed.
void split_counts(const std::vector<int>& ue, const std::vector<int>& ve,
                  std::vector<int>& a, std::vector<int>& b) {
  int consumed = 0;
  for (std::size_t i = 0; i < ue.size(); ++i) {
    int m = ue[i] + ve[i];
    int to_first = (consumed % 2 == 0) ? (m + 1) / 2 : m / 2;
    a[i] = to_first;
    b[i] = m - to_first;
    consumed += m;
  }
}

}  // namespace

std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
  require_pair_shape(u, v);
  Monomial first = unit_monomial(u.ambient());
  Monomial second = unit_monomial(u.ambient());
  split_counts(u.exponents, v.exponents, first.exponents, second.exponents);
  return {std::move(first), std::move(second)};
}

bool is_sorted_pair(const Monomial& u, const Monomial& v) {
  require_pair_shape(u, v);
  int consumed = 0;
  for (std::size_t i = 0; i < u.exponents.size(); ++i) {
    int m = u.exponents[i] + v.exponents[i];
    int to_first = (consumed % 2 == 0) ? (m + 1) / 2 : m / 2;
    if (u.exponents[i] != to_first) return false;
    consumed += m;
  }
  return true;
}

bool is_sorted_tuple(const std::vector<Monomial>& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (!is_sorted_pair(tuple[i], tuple[j])) return false;
  return true;
}

std::vector<Monomial> sort_tuple(const std::vector<Monomial>& tuple) {
  if (tuple.empty()) return {};
  int d = tuple.front().degree();
  std::vector<int> merged;
  for (const Monomial& m : tuple) {
    if (m.degree() != d)
      throw std::invalid_argument("sort_tuple: degrees differ");
    for (int i = 0; i < m.ambient(); ++i)
      for (int rep = 0; rep < m.exponents[static_cast<std::size_t>(i)]; ++rep)
        merged.push_back(i + 1);
  }
  std::sort(merged.begin(), merged.end());
  std::vector<Monomial> out(tuple.size(), unit_monomial(tuple.front().ambient()));
  for (std::size_t p = 0; p < merged.size(); ++p)
    ++out[p % tuple.size()].exponents[static_cast<std::size_t>(merged[p] - 1)];
  return out;
}

SortClosureResult verify_sortable(const MonomialIdeal& ideal,
                                  const Deadline* deadline) {
  SortClosureResult result;
  if (ideal.size() < 2) return result;
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("verify_sortable: not equigenerated");
  MonomialSet gset = generator_set(ideal);
  const auto& g = ideal.gens;
  Monomial a = unit_monomial(ideal.ambient);
  Monomial b = unit_monomial(ideal.ambient);
  for (std::size_t i = 0; i < g.size(); ++i) {
    poll_deadline(deadline, "verify_sortable");
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      split_counts(g[i].exponents, g[j].exponents, a.exponents, b.exponents);
      if (!gset.count(a) || !gset.count(b)) {
        result.closed = false;
        result.counterexample = {g[i], g[j]};
        return result;
      }
    }
  }
  return result;
}

SortClosureResult verify_sortable(const CBounded& spec,
                                  const Deadline* deadline) {
  return verify_sortable(generators(spec), deadline);
}

namespace {

std::vector<std::vector<int>> sorted_index_tuples(
    const std::vector<Monomial>& g, int tuple_len, const Deadline* deadline) {
  std::vector<std::vector<int>> tuples;
  int m = static_cast<int>(g.size());
  if (tuple_len == 1) {
    for (int i = 0; i < m; ++i) tuples.push_back({i});
    return tuples;
  }
  for (int i = 0; i < m; ++i) {
    poll_deadline(deadline, "verify_l_exchange");
    for (int j = i; j < m; ++j) {
      if (!is_sorted_pair(g[static_cast<std::size_t>(i)],
                          g[static_cast<std::size_t>(j)]))
        continue;
      if (tuple_len == 2) {
        tuples.push_back({i, j});
        continue;
      }
      for (int k = j; k < m; ++k) {
        if (is_sorted_pair(g[static_cast<std::size_t>(j)],
                           g[static_cast<std::size_t>(k)]) &&
            is_sorted_pair(g[static_cast<std::size_t>(i)],
                           g[static_cast<std::size_t>(k)]))
          tuples.push_back({i, j, k});
      }
    }
  }
  return tuples;
}

std::vector<int> tuple_product(const std::vector<Monomial>& g,
                               const std::vector<int>& tuple) {
  std::vector<int> p(g.front().exponents.size(), 0);
  for (int idx : tuple)
    for (std::size_t q = 0; q < p.size(); ++q)
      p[q] += g[static_cast<std::size_t>(idx)].exponents[q];
  return p;
}

std::string tuple_string(const std::vector<Monomial>& g,
                         const std::vector<int>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(g[static_cast<std::size_t>(tuple[i])]);
  }
  return out + ")";
}

}  // namespace

ExchangeResult verify_l_exchange(const MonomialIdeal& ideal, int tuple_len,
                                 const Deadline* deadline) {
  if (tuple_len < 1 || tuple_len > 3)
    throw std::invalid_argument("verify_l_exchange: tuple length must be 1..3");
  ExchangeResult result;
  if (ideal.size() < 2) return result;
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("verify_l_exchange: not equigenerated");
  int n = ideal.ambient;
  const auto& g = ideal.gens;
  MonomialSet gset = generator_set(ideal);

  std::vector<std::vector<int>> tuples =
      sorted_index_tuples(g, tuple_len, deadline);
  result.tuples = static_cast<long long>(tuples.size());

  std::vector<std::vector<int>> products;
  products.reserve(tuples.size());
  for (const auto& tuple : tuples) products.push_back(tuple_product(g, tuple));

  // The partner side only enters through its product, so sort the products
  // once and answer "is there a product above mine at coordinate q with my
  // prefix" by binary search.
  std::vector<int> order(products.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return products[static_cast<std::size_t>(a)] <
           products[static_cast<std::size_t>(b)];
  });

  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    poll_deadline(deadline, "verify_l_exchange");
    const std::vector<int>& p = products[ti];
    for (int q = 1; q <= n - 1; ++q) {
      std::size_t prefix = static_cast<std::size_t>(q - 1);
      auto cmp = [&](int a, const std::vector<int>& key) {
        return std::lexicographical_compare(
            products[static_cast<std::size_t>(a)].begin(),
            products[static_cast<std::size_t>(a)].begin() + prefix,
            key.begin(), key.begin() + prefix);
      };
      auto cmp2 = [&](const std::vector<int>& key, int a) {
        return std::lexicographical_compare(
            key.begin(), key.begin() + prefix,
            products[static_cast<std::size_t>(a)].begin(),
            products[static_cast<std::size_t>(a)].begin() + prefix);
      };
      auto lo = std::lower_bound(order.begin(), order.end(), p, cmp);
      auto hi = std::upper_bound(order.begin(), order.end(), p, cmp2);
      if (lo == hi) continue;
      // Inside an equal-prefix run the products sort by coordinate q first,
      // so the run's last element carries the largest value there.
      const std::vector<int>& top =
          products[static_cast<std::size_t>(*(hi - 1))];
      if (top[prefix] <= p[prefix]) continue;

      bool found = false;
      for (int idx : tuples[ti]) {
        const Monomial& u = g[static_cast<std::size_t>(idx)];
        for (int j = q + 1; j <= n && !found; ++j) {
          if (u.exponents[static_cast<std::size_t>(j - 1)] == 0) continue;
          if (gset.count(exchange(u, q, j))) found = true;
        }
        if (found) break;
      }
      if (!found) {
        result.ok = false;
        result.detail = "tuple " + tuple_string(g, tuples[ti]) +
                        " admits no exchange at q=" + std::to_string(q) +
                        " against " +
                        tuple_string(g, tuples[static_cast<std::size_t>(
                                            *(hi - 1))]);
        return result;
      }
    }
  }
  return result;
}

ExchangeResult verify_l_exchange(const CBounded& spec, int tuple_len,
                                 const Deadline* deadline) {
  return verify_l_exchange(generators(spec), tuple_len, deadline);
}

ReesRelations rees_relations(const MonomialIdeal& ideal) {
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("rees_relations: not equigenerated");
  ReesRelations out;
  const auto& g = ideal.gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto [a, b] = sort_pair(g[i], g[j]);
      if (a != g[i] || b != g[j])
        out.quadratic.push_back({g[i], g[j], a, b});
    }
  }

  MonomialSet gset = generator_set(ideal);
  int n = ideal.ambient;
  for (const Monomial& u : ideal.gens) {
    for (int i = 1; i <= n; ++i) {
      std::vector<int> candidates;
      for (int j = i + 1; j <= n; ++j) {
        if (u.exponents[static_cast<std::size_t>(j - 1)] == 0) continue;
        if (gset.count(exchange(u, i, j))) candidates.push_back(j);
      }
      if (candidates.empty()) continue;
      LinearRelation rel;
      rel.i = i;
      rel.j = candidates.back();
      rel.u = u;
      rel.v = exchange(u, i, rel.j);
      rel.alternates = candidates;
      for (int j : candidates) {
        if (u.exponents[static_cast<std::size_t>(j - 1)] < 2) continue;
        Monomial twice = exchange(exchange(u, i, j), i, j);
        if (gset.count(twice)) rel.literal_j = j;
      }
      if (!rel.literal_j || *rel.literal_j != rel.j) ++out.literal_divergences;
      out.linear.push_back(std::move(rel));
    }
  }
  return out;
}

ReesRelations rees_relations(const CBounded& spec) {
  return rees_relations(generators(spec));
}

}  // namespace tspread
