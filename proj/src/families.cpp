#include "tspread/families.hpp"

#include <stdexcept>

#include "tspread/util.hpp"

namespace tspread {

void validate(const CBounded& spec) {
  if (spec.c < 1) throw std::invalid_argument("cbounded: c must be >= 1");
  if (spec.n < 1) throw std::invalid_argument("cbounded: n must be >= 1");
  if (spec.d < 1) throw std::invalid_argument("cbounded: d must be >= 1");
  if (spec.t < 0) throw std::invalid_argument("cbounded: t must be >= 0");
}

void validate(const BlockType& spec) {
  if (spec.n < 1) throw std::invalid_argument("blocktype: n must be >= 1");
  if (spec.d < 1) throw std::invalid_argument("blocktype: d must be >= 1");
  if (spec.t < 0) throw std::invalid_argument("blocktype: t must be >= 0");
  if (spec.k < 1 || spec.k > spec.n)
    throw std::invalid_argument("blocktype: k must satisfy 1 <= k <= n");
}

void validate(const VeroneseType& spec) {
  if (spec.n < 1) throw std::invalid_argument("veronese: n must be >= 1");
  if (spec.d < 1) throw std::invalid_argument("veronese: d must be >= 1");
  if (static_cast<int>(spec.bounds.size()) != spec.n)
    throw std::invalid_argument("veronese: bounds must have length n");
  long long total = 0;
  int prev = 1;
  for (int b : spec.bounds) {
    if (b < prev)
      throw std::invalid_argument(
          "veronese: bounds must satisfy 1 <= b_1 <= ... <= b_n");
    if (b > spec.d) throw std::invalid_argument("veronese: bounds must be <= d");
    prev = b;
    total += b;
  }
  if (total <= spec.d)
    throw std::invalid_argument("veronese: require d < sum of bounds");
}

std::string describe(const CBounded& s) {
  return "cbounded(c=" + std::to_string(s.c) + ",n=" + std::to_string(s.n) +
         ",d=" + std::to_string(s.d) + ",t=" + std::to_string(s.t) + ")";
}

std::string describe(const BlockType& s) {
  return "blocktype(n=" + std::to_string(s.n) + ",d=" + std::to_string(s.d) +
         ",t=" + std::to_string(s.t) + ",k=" + std::to_string(s.k) + ")";
}

std::string describe(const IdealSpec& spec) {
  if (const auto* c = std::get_if<CBounded>(&spec)) return describe(*c);
  if (const auto* b = std::get_if<BlockType>(&spec)) return describe(*b);
  const auto& v = std::get<VeroneseType>(spec);
  std::string out = "veronese(n=" + std::to_string(v.n) +
                    ",d=" + std::to_string(v.d) + ",bounds=";
  for (std::size_t i = 0; i < v.bounds.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v.bounds[i]);
  }
  return out + ")";
}

bool family_nonempty(const CBounded& spec) {
  validate(spec);
  return cover_min_position(spec, spec.d) <= spec.n;
}

namespace {

// Shared walk over weakly increasing sequences with gaps >= t, tracking the
// length of the current exact-gap run and the number of maximal blocks.
// block_cap = 0 disables the per-block bound; max_blocks = 0 disables the
// block-count bound.
void enumerate_spread(int n, int d, int t, int block_cap, int max_blocks,
                      std::vector<int>& seq, int run, int blocks,
                      std::vector<Monomial>& out) {
  int pos = static_cast<int>(seq.size());
  if (pos == d) {
    Monomial u = unit_monomial(n);
    for (int v : seq) ++u.exponents[static_cast<std::size_t>(v - 1)];
    out.push_back(std::move(u));
    return;
  }
  int lo = seq.empty() ? 1 : seq.back() + t;
  // Remaining positions still need room for gaps of at least t each.
  int hi = n - t * (d - 1 - pos);
  for (int v = lo; v <= hi; ++v) {
    bool extends = !seq.empty() && v == seq.back() + t;
    int next_run = extends ? run + 1 : 1;
    int next_blocks = seq.empty() ? 1 : (extends ? blocks : blocks + 1);
    if (block_cap > 0 && next_run > block_cap) continue;
    if (max_blocks > 0 && next_blocks > max_blocks) continue;
    seq.push_back(v);
    enumerate_spread(n, d, t, block_cap, max_blocks, seq, next_run,
                     next_blocks, out);
    seq.pop_back();
  }
}

}  // namespace

MonomialIdeal generators(const CBounded& spec) {
  validate(spec);
  std::vector<Monomial> gens;
  std::vector<int> seq;
  enumerate_spread(spec.n, spec.d, spec.t, spec.c, 0, seq, 0, 0, gens);
  // Ascending sequences come out in lex-descending monomial order already.
  return MonomialIdeal{spec.n, std::move(gens)};
}

MonomialIdeal generators(const BlockType& spec) {
  validate(spec);
  std::vector<Monomial> gens;
  std::vector<int> seq;
  enumerate_spread(spec.n, spec.d, spec.t, 0, spec.k, seq, 0, 0, gens);
  return MonomialIdeal{spec.n, std::move(gens)};
}

namespace {

void enumerate_bounded(const VeroneseType& spec, std::vector<int>& exps,
                       int pos, int remaining, std::vector<Monomial>& out) {
  if (pos == spec.n - 1) {
    if (remaining <= spec.bounds[static_cast<std::size_t>(pos)]) {
      exps[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(Monomial{exps});
      exps[static_cast<std::size_t>(pos)] = 0;
    }
    return;
  }
  int cap = std::min(remaining, spec.bounds[static_cast<std::size_t>(pos)]);
  for (int v = cap; v >= 0; --v) {
    exps[static_cast<std::size_t>(pos)] = v;
    enumerate_bounded(spec, exps, pos + 1, remaining - v, out);
  }
  exps[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

MonomialIdeal generators(const VeroneseType& spec) {
  validate(spec);
  std::vector<Monomial> gens;
  std::vector<int> exps(static_cast<std::size_t>(spec.n), 0);
  enumerate_bounded(spec, exps, 0, spec.d, gens);
  return MonomialIdeal{spec.n, std::move(gens)};
}

MonomialIdeal generators(const IdealSpec& spec) {
  return std::visit([](const auto& s) { return generators(s); }, spec);
}

long long generator_count_blocktype(int n, int d, int k) {
  if (k < 1 || k > n || d < 1)
    throw std::invalid_argument("require 1 <= k <= n and d >= 1");
  long long total = 0;
  for (int i = 1; i <= k; ++i) total += binomial(d - 1, i - 1) * binomial(n, i);
  return total;
}

int cover_min_position(const CBounded& spec, int i) {
  return (i - 1) * spec.t + floor_div(i - 1, spec.c) + 1;
}

int cover_max_position(const CBounded& spec, int i) {
  int k = floor_div(spec.d - 1, spec.c);
  int r = spec.d - k * spec.c;
  return spec.n - k - spec.t * (spec.d - 1) + (i - 1) * spec.t +
         ceil_div(i - r, spec.c);
}

std::vector<int> cover_min_positions(const CBounded& spec) {
  validate(spec);
  std::vector<int> out;
  for (int i = 1; i <= spec.d; ++i) out.push_back(cover_min_position(spec, i));
  return out;
}

std::vector<int> cover_max_positions(const CBounded& spec) {
  validate(spec);
  std::vector<int> out;
  for (int i = 1; i <= spec.d; ++i) out.push_back(cover_max_position(spec, i));
  return out;
}

namespace {

void require_nonempty(const CBounded& spec) {
  if (!family_nonempty(spec))
    throw std::invalid_argument(
        "family is empty: (d-1)t + floor((d-1)/c) + 1 > n for " +
        describe(spec));
}

}  // namespace

Monomial cover_min_generator(const CBounded& spec) {
  require_nonempty(spec);
  return monomial_of(make_multiset(cover_min_positions(spec), spec.n));
}

Monomial cover_max_generator(const CBounded& spec) {
  require_nonempty(spec);
  return monomial_of(make_multiset(cover_max_positions(spec), spec.n));
}

int height_cbounded(const CBounded& spec) {
  require_nonempty(spec);
  int k = floor_div(spec.d - 1, spec.c);
  return spec.n - (k + spec.t * (spec.d - 1));
}

bool is_principal_cbounded(const CBounded& spec) {
  require_nonempty(spec);
  int k = floor_div(spec.d - 1, spec.c);
  int r = spec.d - k * spec.c;
  // One generator iff the least admissible top index is n itself and the
  // coordinate ranges all collapse, which needs d <= c or c | d. The n
  // condition alone gives height one, not principality: cbounded(2,2,3,0)
  // is (x1^2*x2, x1*x2^2), height one with two generators.
  return spec.n == spec.t * (spec.d - 1) + k + 1 &&
         (spec.d <= spec.c || r == spec.c);
}

bool is_cohen_macaulay(const CBounded& spec) {
  return is_principal_cbounded(spec) || spec.d <= spec.c || spec.c == 1;
}

bool is_gorenstein(const CBounded& spec) {
  return is_principal_cbounded(spec) || spec.d == 1;
}

}  // namespace tspread
