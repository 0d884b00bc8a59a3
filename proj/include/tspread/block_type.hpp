#pragma once

#include "tspread/families.hpp"
#include "tspread/ideal.hpp"

namespace tspread {

/// (n-k) * floor((d-1)/k) + d - 1: the largest degree of a monomial outside
/// the support-bounded family's ideal, which determines its regularity
/// because the quotient is zero-dimensional. The companion Betti-table
/// regularity of the ideal itself is one higher; see the oracle module.
/// Pre: 1 < k < n and d >= 2.
long long regularity_blocktype(int n, int d, int k);

/// A maximum-degree monomial outside the ideal. Maximality forces it into
/// the socle: bumping any coordinate lands inside.
struct SoclePoint {
  Monomial point;
  int degree = 0;
};

/// Maximum degree of a monomial outside the ideal, by bounded exhaustive
/// search. Pre: the ideal contains a power of every variable.
int top_socle_degree(const MonomialIdeal& ideal);
SoclePoint top_socle_point(const MonomialIdeal& ideal);

/// True iff the s-th power of the (n, d, 0, k) support-bounded ideal equals
/// the (s*d)-th power of the graded maximal ideal. Pre: s >= 1.
bool power_equals_mpower(int n, int d, int k, int s);

/// Least j with the j-th power a power of the maximal ideal; at most n - 1.
/// Pre: 1 < k < n.
int smallest_power_j(int n, int d, int k);

/// max{j - 1, n - ceil(n/d)} with j = smallest_power_j(n, d, k).
/// Pre: 1 < k < n.
long long fiber_cone_regularity(int n, int d, int k);

}  // namespace tspread
