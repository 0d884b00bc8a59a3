#include "tspread/block_type.hpp"

#include <algorithm>
#include <stdexcept>

#include "tspread/util.hpp"

namespace tspread {

long long regularity_blocktype(int n, int d, int k) {
  if (!(1 < k && k < n))
    throw std::invalid_argument("regularity_blocktype: require 1 < k < n");
  if (d < 2) throw std::invalid_argument("regularity_blocktype: require d >= 2");
  return static_cast<long long>(n - k) * floor_div(d - 1, k) + d - 1;
}

namespace {

struct SocleSearch {
  std::vector<int> caps;    // per-variable cap: minimal pure power minus one
  std::vector<int> suffix;  // sum of caps from position i onward
  std::vector<int> current;
  std::vector<int> best_point;
  int best = -1;

  // Depth-first over exponent tuples, largest exponents first, pruning by
  // the best still reachable degree and filtering the compatible gens.
  void descend(std::size_t pos, int degree,
               const std::vector<const Monomial*>& alive) {
    if (degree + suffix[pos] <= best) return;
    if (pos == caps.size()) {
      if (alive.empty() && degree > best) {
        best = degree;
        best_point = current;
      }
      return;
    }
    for (int e = caps[pos]; e >= 0; --e) {
      std::vector<const Monomial*> next;
      bool dominated = false;
      for (const Monomial* g : alive) {
        if (g->exponents[pos] <= e) {
          if (pos + 1 == caps.size()) {
            dominated = true;  // g divides the completed tuple
            break;
          }
          next.push_back(g);
        }
      }
      if (dominated) continue;
      current[pos] = e;
      descend(pos + 1, degree + e, next);
    }
    current[pos] = 0;
  }
};

SocleSearch run_socle_search(const MonomialIdeal& ideal) {
  int n = ideal.ambient;
  std::vector<int> caps(static_cast<std::size_t>(n), -1);
  for (const Monomial& g : ideal.gens) {
    std::vector<int> supp = support(g);
    if (supp.size() == 1) {
      std::size_t i = static_cast<std::size_t>(supp.front() - 1);
      int e = g.exponents[i];
      caps[i] = (caps[i] < 0) ? e - 1 : std::min(caps[i], e - 1);
    }
  }
  for (int c : caps)
    if (c < 0)
      throw std::invalid_argument(
          "top_socle_degree: ideal lacks a pure power of some variable");

  SocleSearch search;
  search.caps = caps;
  search.suffix.assign(caps.size() + 1, 0);
  for (std::size_t i = caps.size(); i-- > 0;)
    search.suffix[i] = search.suffix[i + 1] + caps[i];
  search.current.assign(caps.size(), 0);

  std::vector<const Monomial*> alive;
  alive.reserve(ideal.size());
  for (const Monomial& g : ideal.gens) alive.push_back(&g);
  search.descend(0, 0, alive);
  return search;
}

}  // namespace

SoclePoint top_socle_point(const MonomialIdeal& ideal) {
  SocleSearch search = run_socle_search(ideal);
  // The constant monomial lies outside every proper ideal, so the search
  // always finds something.
  return SoclePoint{Monomial{search.best_point}, search.best};
}

int top_socle_degree(const MonomialIdeal& ideal) {
  return run_socle_search(ideal).best;
}

bool power_equals_mpower(int n, int d, int k, int s) {
  if (s < 1) throw std::invalid_argument("power_equals_mpower: s >= 1");
  MonomialIdeal ideal = generators(BlockType{n, d, 0, k});
  MonomialIdeal pow = power(ideal, s);
  return equals(pow, maximal_ideal_power(n, s * d));
}

int smallest_power_j(int n, int d, int k) {
  if (!(1 < k && k < n))
    throw std::invalid_argument("smallest_power_j: require 1 < k < n");
  MonomialIdeal ideal = generators(BlockType{n, d, 0, k});
  MonomialIdeal pow = ideal;
  for (int j = 1; j <= n - 1; ++j) {
    if (j > 1) pow = multiply(pow, ideal);
    if (equals(pow, maximal_ideal_power(n, j * d))) return j;
  }
  throw std::logic_error(
      "smallest_power_j: no power up to n-1 matched, which contradicts the "
      "sandwich bound");
}

long long fiber_cone_regularity(int n, int d, int k) {
  int j = smallest_power_j(n, d, k);
  return std::max<long long>(j - 1, n - ceil_div(n, d));
}

}  // namespace tspread
