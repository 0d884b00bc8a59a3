#include "tspread/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

namespace {

void sort_lex_descending(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Sort by degree so a potential divisor always precedes its multiples;
  // keeps the scan quadratic only over survivors.
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) {
                     return a.degree() < b.degree();
                   });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal make_ideal(int ambient, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.ambient() != ambient)
      throw std::invalid_argument("generator ambient mismatch");
  gens = minimalize(std::move(gens));
  sort_lex_descending(gens);
  return MonomialIdeal{ambient, std::move(gens)};
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  for (const Monomial& g : ideal.gens)
    if (divides(g, u)) return true;
  return false;
}

bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  for (const Monomial& g : inner.gens)
    if (!contains(outer, g)) return false;
  return true;
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.ambient == b.ambient && a.gens == b.gens;
}

bool is_equigenerated(const MonomialIdeal& a) {
  if (a.gens.empty()) return true;
  int d = a.gens.front().degree();
  for (const Monomial& g : a.gens)
    if (g.degree() != d) return false;
  return true;
}

int generator_degree(const MonomialIdeal& a) {
  if (a.gens.empty() || !is_equigenerated(a))
    throw std::invalid_argument("generator_degree: not equigenerated");
  return a.gens.front().degree();
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("multiply: ambient mismatch");
  if (a.gens.empty() || b.gens.empty()) return MonomialIdeal{a.ambient, {}};
  if (is_equigenerated(a) && is_equigenerated(b)) {
    // Equal-degree products: no divisibility among distinct elements, so
    // minimalization reduces to deduplication.
    MonomialSet seen;
    for (const Monomial& u : a.gens)
      for (const Monomial& v : b.gens) seen.insert(product(u, v));
    std::vector<Monomial> gens(seen.begin(), seen.end());
    sort_lex_descending(gens);
    return MonomialIdeal{a.ambient, std::move(gens)};
  }
  std::vector<Monomial> prods;
  prods.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& u : a.gens)
    for (const Monomial& v : b.gens) prods.push_back(product(u, v));
  return make_ideal(a.ambient, std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, int s) {
  if (s < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal out = a;
  for (int i = 1; i < s; ++i) out = multiply(out, a);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> divided;
  divided.reserve(ideal.gens.size());
  for (const Monomial& g : ideal.gens) divided.push_back(colon_generator(g, u));
  return make_ideal(ideal.ambient, std::move(divided));
}

namespace {

void enumerate_degree(int ambient, int e, std::vector<int>& exps, int pos,
                      int remaining, std::vector<Monomial>& out) {
  if (pos == ambient - 1) {
    exps[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(Monomial{exps});
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    exps[static_cast<std::size_t>(pos)] = v;
    enumerate_degree(ambient, e, exps, pos + 1, remaining - v, out);
  }
}

}  // namespace

MonomialIdeal maximal_ideal_power(int ambient, int e) {
  if (ambient < 1) throw std::invalid_argument("ambient must be positive");
  if (e < 1) throw std::invalid_argument("power must be >= 1");
  std::vector<Monomial> gens;
  std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
  enumerate_degree(ambient, e, exps, 0, e, gens);
  // Descending first coordinates give lex-descending output directly.
  return MonomialIdeal{ambient, std::move(gens)};
}

MonomialSet generator_set(const MonomialIdeal& a) {
  return MonomialSet(a.gens.begin(), a.gens.end());
}

}  // namespace tspread
