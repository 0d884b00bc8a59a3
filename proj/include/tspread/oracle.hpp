#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/util.hpp"

namespace tspread {

/// Graded Betti numbers: (homological index i, internal degree j) -> rank.
struct BettiTable {
  int ambient = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;
  long long total(int i) const;           // row sum over j
  int projective_dimension() const;       // max i with a nonzero entry
  int regularity() const;                 // max j - i over nonzero entries
  bool linear_for_degree(int d) const;    // nonzero only at j == d + i
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(std::uint64_t volume);
  std::uint64_t volume;
};

/// Exact graded Betti numbers over a characteristic-zero field, one
/// multidegree at a time inside the box bounded by the lcm of the
/// generators. Reduced homology ranks come from fraction-free elimination
/// over exact integers. Throws BudgetExceeded when the box has more than
/// `budget` multidegrees.
BettiTable betti_table(const MonomialIdeal& ideal,
                       std::uint64_t budget = 100000,
                       const Deadline* deadline = nullptr);

int pd_ideal(const BettiTable& table);
/// depth of the quotient ring, by depth = n - pd(quotient). Pre: nonzero
/// ideal.
int depth_quotient(const BettiTable& table);
int reg_ideal(const BettiTable& table);
int reg_quotient(const BettiTable& table);  // reg_ideal - 1
bool has_linear_resolution(const BettiTable& table, int degree);

/// Minimum cardinality of a set of variables meeting every generator's
/// support. Pre: ambient <= 30 (exhaustive over subsets).
int height_oracle(const MonomialIdeal& ideal);

}  // namespace tspread
