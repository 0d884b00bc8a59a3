#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tspread/multiset.hpp"

namespace tspread {

/// Dense exponent tuple over variables x1..xn. The ambient ring is carried
/// by the length of the tuple.
struct Monomial {
  std::vector<int> exponents;

  int ambient() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool operator==(const Monomial&) const = default;
};

Monomial make_monomial(std::vector<int> exponents);
Monomial unit_monomial(int ambient);
Monomial variable(int ambient, int index);  // x_index, 1-based

/// Degree-d multisets and degree-d monomials are the same data; these two
/// are mutually inverse on that domain.
Monomial monomial_of(const Multiset& a);
Multiset multiset_of(const Monomial& u);  // pre: degree >= 1

std::vector<int> support(const Monomial& u);  // ascending variable indices
int min_index(const Monomial& u);             // 0 when u == 1
int max_index(const Monomial& u);             // 0 when u == 1

bool divides(const Monomial& u, const Monomial& v);  // u | v
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial product(const Monomial& u, const Monomial& v);
Monomial quotient(const Monomial& u, const Monomial& v);  // u / v, pre v | u

/// g / gcd(g, u): the generator of (g) : (u).
Monomial colon_generator(const Monomial& g, const Monomial& u);

/// x_into * u / x_outof. Pre: x_outof divides u.
Monomial exchange(const Monomial& u, int into, int outof);

/// Lexicographic order with x1 > x2 > ... > xn.
bool lex_greater(const Monomial& u, const Monomial& v);

std::string to_string(const Monomial& u);  // "x1^2*x3*x5", "1"
Monomial parse_monomial(std::string_view text, int ambient);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const;
};

}  // namespace tspread
