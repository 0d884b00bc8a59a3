#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tspread {

/// Weakly increasing sequence of indices drawn from [1, ambient]. This is
/// the combinatorial form of a monomial of degree size().
struct Multiset {
  std::vector<int> elems;
  int ambient = 0;

  int size() const { return static_cast<int>(elems.size()); }
  bool operator==(const Multiset&) const = default;
};

/// Validating constructor; throws std::invalid_argument when the sequence is
/// not weakly increasing or leaves [1, ambient]. Empty multisets are
/// rejected: every object here has degree at least one.
Multiset make_multiset(std::vector<int> elems, int ambient);

/// Maximal run whose consecutive gaps are all exactly t.
struct Block {
  int start = 0;  // 0-based position of the first element in the parent
  std::vector<int> elems;

  int size() const { return static_cast<int>(elems.size()); }
  int min() const { return elems.front(); }
  int max() const { return elems.back(); }
  bool operator==(const Block&) const = default;
};

/// True iff every consecutive gap is >= t. Every multiset is 0-spread.
bool is_t_spread(const Multiset& a, int t);

/// Unique partition into maximal blocks, left to right. With t = 0 a block
/// is a maximal run of equal values. Pre: a is t-spread.
std::vector<Block> block_decomposition(const Multiset& a, int t);

/// Number of maximal blocks. Pre: a is t-spread.
int block_type(const Multiset& a, int t);

/// True iff every maximal block has size <= c. Pre: a is t-spread.
bool is_c_bounded(const Multiset& a, int t, int c);

/// Positionwise shift i_j -> i_j + (j-1). Turns a t-spread multiset into a
/// (t+1)-spread one with the same block sizes; ambient grows by size()-1.
Multiset stretch(const Multiset& a);

/// Inverse of stretch: i_j -> i_j - (j-1). Pre: a strictly increasing and
/// the result stays weakly increasing inside [1, ambient - size() + 1].
Multiset shrink(const Multiset& a);

Multiset stretch_pow(Multiset a, int times);
Multiset shrink_pow(Multiset a, int times);

/// Sequence (positionwise) order. Smaller sequence = lex-greater monomial.
bool seq_less(const Multiset& a, const Multiset& b);

std::string to_string(const Multiset& a);  // "{1,3,5}"
Multiset parse_multiset(std::string_view text, int ambient);

}  // namespace tspread
