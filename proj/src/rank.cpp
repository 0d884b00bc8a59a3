#include "tspread/rank.hpp"

#include <utility>

namespace tspread {

int rank_exact(IntMatrix m) {
  if (m.empty() || m.front().empty()) return 0;
  std::size_t rows = m.size();
  std::size_t cols = m.front().size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    // Bareiss step: exact division keeps entries as minors of the input.
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_exact_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (int v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return rank_exact(std::move(m));
}

}  // namespace tspread
