#pragma once

#include <unordered_set>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// Monomial ideal given by its minimal generators, kept lex-descending.
/// make_ideal minimalizes, so `gens` never contains a divisor pair.
struct MonomialIdeal {
  int ambient = 0;
  std::vector<Monomial> gens;

  bool empty() const { return gens.empty(); }
  std::size_t size() const { return gens.size(); }
};

using MonomialSet = std::unordered_set<Monomial, MonomialHash>;

MonomialIdeal make_ideal(int ambient, std::vector<Monomial> gens);

/// Drops every element divisible by another; idempotent. Duplicates collapse.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& u);
bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int s);  // pre: s >= 1

/// Minimal generators of ideal : (u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

bool is_equigenerated(const MonomialIdeal& a);
int generator_degree(const MonomialIdeal& a);  // pre: nonempty equigenerated

/// All monomials of degree e in n variables, i.e. the e-th power of the
/// graded maximal ideal.
MonomialIdeal maximal_ideal_power(int ambient, int e);

MonomialSet generator_set(const MonomialIdeal& a);

}  // namespace tspread
