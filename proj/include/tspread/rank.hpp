#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tspread {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over the rationals of an integer matrix, by fraction-free
/// (Bareiss) elimination. Exact; entries may grow, hence the big integers.
int rank_exact(IntMatrix m);

/// Rank of the matrix whose rows are the given int vectors.
int rank_exact_rows(const std::vector<std::vector<int>>& rows);

}  // namespace tspread
