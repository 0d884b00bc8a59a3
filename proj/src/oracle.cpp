#include "tspread/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "tspread/rank.hpp"

namespace tspread {

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) sum += value;
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, value] : entries)
    if (value != 0) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, value] : entries)
    if (value != 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

bool BettiTable::linear_for_degree(int d) const {
  for (const auto& [key, value] : entries)
    if (value != 0 && key.second != d + key.first) return false;
  return true;
}

BudgetExceeded::BudgetExceeded(std::uint64_t v)
    : std::runtime_error("multidegree box volume " + std::to_string(v) +
                         " exceeds the homology budget"),
      volume(v) {}

namespace {

// Reduced homology of the complex of subsets b of the compact vertex set
// with x^(a-b) in the ideal, given as one 0/1 mask of admissible positions
// per divisor of x^a. Level l holds the faces with l elements; the empty
// face sits at level 0.
void accumulate_slice(const std::vector<std::uint32_t>& allowed, int nverts,
                      int total_degree, BettiTable& table) {
  if (nverts > 22)
    throw BudgetExceeded(std::uint64_t{1} << nverts);
  std::uint32_t full = (1u << nverts) - 1;
  std::vector<std::vector<std::uint32_t>> faces(
      static_cast<std::size_t>(nverts) + 1);
  for (std::uint32_t b = 0; b <= full; ++b) {
    bool face = false;
    for (std::uint32_t mask : allowed)
      if ((b & ~mask) == 0) {
        face = true;
        break;
      }
    if (face) faces[static_cast<std::size_t>(std::popcount(b))].push_back(b);
  }

  int top = nverts;
  while (top > 0 && faces[static_cast<std::size_t>(top)].empty()) --top;

  // rank of the boundary map level -> level-1, for levels 1..top
  std::vector<int> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int level = 1; level <= top; ++level) {
    const auto& cols = faces[static_cast<std::size_t>(level)];
    const auto& rows = faces[static_cast<std::size_t>(level - 1)];
    if (cols.empty() || rows.empty()) continue;
    std::vector<std::uint32_t> row_index(rows.begin(), rows.end());
    std::vector<std::vector<int>> matrix(
        rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
      std::uint32_t f = cols[cj];
      int sign = 1;
      for (std::uint32_t rest = f; rest != 0; rest &= rest - 1) {
        std::uint32_t bit = rest & (~rest + 1);
        std::uint32_t child = f ^ bit;
        auto it = std::lower_bound(row_index.begin(), row_index.end(), child);
        assert(it != row_index.end() && *it == child);
        matrix[static_cast<std::size_t>(it - row_index.begin())][cj] = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<std::size_t>(level)] = rank_exact_rows(matrix);
  }

  for (int level = 0; level <= top; ++level) {
    long long f = static_cast<long long>(faces[static_cast<std::size_t>(level)].size());
    long long r1 = boundary_rank[static_cast<std::size_t>(level)];
    long long r2 = boundary_rank[static_cast<std::size_t>(level) + 1];
    assert(r1 + r2 <= f);
    long long h = f - r1 - r2;
    if (h != 0) table.entries[{level, total_degree}] += h;
  }
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, std::uint64_t budget,
                       const Deadline* deadline) {
  BettiTable table;
  table.ambient = ideal.ambient;
  if (ideal.empty()) return table;

  Monomial box = ideal.gens.front();
  for (const Monomial& g : ideal.gens) box = lcm(box, g);
  std::uint64_t volume = 1;
  for (int e : box.exponents) {
    volume *= static_cast<std::uint64_t>(e) + 1;
    if (volume > budget) throw BudgetExceeded(volume);
  }

  int n = ideal.ambient;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    poll_deadline(deadline, "betti_table");
    // Divisors of x^a and, per divisor, the positions where one unit can
    // still be removed from a without losing divisibility.
    std::vector<std::uint32_t> allowed;
    std::uint32_t vertex_union = 0;
    for (const Monomial& g : ideal.gens) {
      bool div = true;
      for (int i = 0; i < n && div; ++i)
        div = g.exponents[static_cast<std::size_t>(i)] <=
              a[static_cast<std::size_t>(i)];
      if (!div) continue;
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] -
                g.exponents[static_cast<std::size_t>(i)] >=
            1)
          mask |= 1u << i;
      allowed.push_back(mask);
      vertex_union |= mask;
    }
    if (!allowed.empty()) {
      bool full_simplex = false;
      for (std::uint32_t mask : allowed)
        if (mask == vertex_union) {
          full_simplex = true;
          break;
        }
      int total_degree = 0;
      for (int v : a) total_degree += v;
      if (vertex_union == 0) {
        table.entries[{0, total_degree}] += 1;  // minimal generator degree
      } else if (!full_simplex) {
        // Compact the vertex positions.
        std::vector<int> positions;
        for (int i = 0; i < n; ++i)
          if (vertex_union & (1u << i)) positions.push_back(i);
        std::vector<std::uint32_t> compact;
        compact.reserve(allowed.size());
        for (std::uint32_t mask : allowed) {
          std::uint32_t c = 0;
          for (std::size_t p = 0; p < positions.size(); ++p)
            if (mask & (1u << positions[p])) c |= 1u << p;
          compact.push_back(c);
        }
        accumulate_slice(compact, static_cast<int>(positions.size()),
                         total_degree, table);
      }
    }
    // next multidegree in the box
    int pos = 0;
    while (pos < n) {
      if (a[static_cast<std::size_t>(pos)] <
          box.exponents[static_cast<std::size_t>(pos)]) {
        ++a[static_cast<std::size_t>(pos)];
        break;
      }
      a[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return table;
}

int pd_ideal(const BettiTable& table) { return table.projective_dimension(); }

int depth_quotient(const BettiTable& table) {
  if (table.entries.empty())
    throw std::invalid_argument("depth_quotient: zero ideal");
  return table.ambient - (table.projective_dimension() + 1);
}

int reg_ideal(const BettiTable& table) { return table.regularity(); }

int reg_quotient(const BettiTable& table) {
  if (table.entries.empty())
    throw std::invalid_argument("reg_quotient: zero ideal");
  return table.regularity() - 1;
}

bool has_linear_resolution(const BettiTable& table, int degree) {
  return table.linear_for_degree(degree);
}

int height_oracle(const MonomialIdeal& ideal) {
  if (ideal.empty()) return 0;
  int n = ideal.ambient;
  if (n > 30) throw std::invalid_argument("height_oracle: ambient too large");
  std::vector<std::uint32_t> supports;
  supports.reserve(ideal.size());
  for (const Monomial& g : ideal.gens) {
    std::uint32_t mask = 0;
    for (int i : support(g)) mask |= 1u << (i - 1);
    supports.push_back(mask);
  }
  int best = n;
  std::uint32_t limit = n == 30 ? 0x3fffffffu : (1u << n) - 1;
  for (std::uint32_t mask = 0; mask <= limit; ++mask) {
    if (std::popcount(mask) >= best) continue;
    bool covers = true;
    for (std::uint32_t s : supports)
      if ((mask & s) == 0) {
        covers = false;
        break;
      }
    if (covers) best = std::popcount(mask);
    if (mask == limit) break;
  }
  return best;
}

}  // namespace tspread
