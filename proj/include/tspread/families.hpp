#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tspread/ideal.hpp"

namespace tspread {

/// Degree-d monomials on [n] whose index multiset is t-spread with every
/// maximal block of size at most c.
struct CBounded {
  int c = 1;
  int n = 1;
  int d = 1;
  int t = 0;
};

/// Degree-d t-spread monomials on [n] with at most k maximal blocks. With
/// t = 0 this bounds the support cardinality by k.
struct BlockType {
  int n = 1;
  int d = 1;
  int t = 0;
  int k = 1;
};

/// Degree-d monomials with coordinatewise exponent bounds b_1 <= ... <= b_n.
struct VeroneseType {
  int n = 1;
  int d = 1;
  std::vector<int> bounds;
};

using IdealSpec = std::variant<CBounded, BlockType, VeroneseType>;

void validate(const CBounded& spec);  // throws std::invalid_argument
void validate(const BlockType& spec);
void validate(const VeroneseType& spec);
std::string describe(const IdealSpec& spec);
std::string describe(const CBounded& spec);
std::string describe(const BlockType& spec);

/// True iff (d-1)t + floor((d-1)/c) + 1 <= n, i.e. the family has at least
/// one member.
bool family_nonempty(const CBounded& spec);

/// Full minimal generating set, sorted lex-descending. Empty constraints
/// yield the empty ideal, not an error.
MonomialIdeal generators(const CBounded& spec);
MonomialIdeal generators(const BlockType& spec);
MonomialIdeal generators(const VeroneseType& spec);
MonomialIdeal generators(const IdealSpec& spec);

/// Number of degree-d monomials on [n] with support cardinality <= k:
/// sum_{i=1}^{k} C(d-1, i-1) * C(n, i).
long long generator_count_blocktype(int n, int d, int k);

// The cover order on generators: u covers v when v = x_i * u / x_j for some
// i < j. It has unique maximal and minimal elements; the i-th entry of any
// generator's multiset lies in [cover_min_position(i), cover_max_position(i)].

/// alpha_i = (i-1)t + floor((i-1)/c) + 1, extended to any integer i.
int cover_min_position(const CBounded& spec, int i);
/// a_i = n - floor((d-1)/c) - t(d-1) + (i-1)t + ceil((i-r)/c) with
/// r = d - floor((d-1)/c)*c, extended to any integer i.
int cover_max_position(const CBounded& spec, int i);

std::vector<int> cover_min_positions(const CBounded& spec);  // i = 1..d
std::vector<int> cover_max_positions(const CBounded& spec);

/// The cover-minimal generator; it is the lex-greatest one.
Monomial cover_min_generator(const CBounded& spec);
/// The cover-maximal generator; it is the lex-smallest one.
Monomial cover_max_generator(const CBounded& spec);

/// n - (floor((d-1)/c) + t(d-1)). Pre: family nonempty.
int height_cbounded(const CBounded& spec);

/// True iff the family has exactly one member, in closed form.
bool is_principal_cbounded(const CBounded& spec);

/// Principal, or a maximal-ideal power (d <= c), or squarefree (c = 1).
bool is_cohen_macaulay(const CBounded& spec);
/// Principal or generated by variables (d = 1).
bool is_gorenstein(const CBounded& spec);

}  // namespace tspread
