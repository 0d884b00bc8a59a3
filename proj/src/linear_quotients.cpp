#include "tspread/linear_quotients.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

namespace {

void require_member(const Monomial& u, const CBounded& spec) {
  validate(spec);
  if (u.ambient() != spec.n || u.degree() != spec.d)
    throw std::invalid_argument("monomial does not match the family shape");
  Multiset a = multiset_of(u);
  if (!is_t_spread(a, spec.t) || !is_c_bounded(a, spec.t, spec.c))
    throw std::invalid_argument("monomial is not a generator of the family");
}

}  // namespace

GapIntervalProfile gap_intervals(const Monomial& u, const CBounded& spec) {
  require_member(u, spec);
  std::vector<Block> blocks = block_decomposition(multiset_of(u), spec.t);
  GapIntervalProfile profile;
  profile.intervals.emplace_back(1, blocks.front().min() - 1);
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    int lo = blocks[j].max() + spec.t + (blocks[j].size() == spec.c ? 1 : 0);
    int hi = blocks[j + 1].min() - 1;
    profile.intervals.emplace_back(lo, hi);
  }
  return profile;
}

std::vector<int> quotient_set(const Monomial& u, const CBounded& spec) {
  std::vector<int> out;
  for (auto [lo, hi] : gap_intervals(u, spec).intervals)
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<int> quotient_set_stretched(const Monomial& u,
                                        const CBounded& spec) {
  std::vector<int> base = quotient_set(u, spec);
  const std::vector<int>& seq = multiset_of(u).elems;
  std::vector<int> out;
  out.reserve(base.size());
  for (int a : base) {
    int last = 0;
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (seq[j] <= a) last = static_cast<int>(j) + 1;
    out.push_back(a + last);
  }
  return out;
}

namespace {

LinearQuotientsResult check_quotients(const MonomialIdeal& ideal,
                                      const CBounded* spec,
                                      const Deadline* deadline) {
  LinearQuotientsResult result;
  const auto& gens = ideal.gens;  // already lex-descending
  for (std::size_t r = 1; r < gens.size(); ++r) {
    poll_deadline(deadline, "verify_linear_quotients");
    const Monomial& u = gens[r];
    // Brute-force colon of the prefix ideal by u.
    std::vector<Monomial> divided;
    divided.reserve(r);
    for (std::size_t k = 0; k < r; ++k)
      divided.push_back(colon_generator(gens[k], u));
    std::vector<Monomial> minimal = minimalize(std::move(divided));
    std::vector<int> vars;
    for (const Monomial& g : minimal) {
      if (g.degree() != 1) {
        result.ok = false;
        result.failing_generator = u;
        result.detail = "colon by " + to_string(u) +
                        " has non-variable minimal generator " + to_string(g);
        return result;
      }
      vars.push_back(min_index(g));
    }
    std::sort(vars.begin(), vars.end());
    if (spec != nullptr) {
      std::vector<int> expected = quotient_set(u, *spec);
      if (vars != expected) {
        result.ok = false;
        result.failing_generator = u;
        result.detail = "colon variables of " + to_string(u) +
                        " do not match the gap-interval set";
        return result;
      }
    }
  }
  return result;
}

}  // namespace

LinearQuotientsResult verify_linear_quotients(const MonomialIdeal& ideal,
                                              const Deadline* deadline) {
  return check_quotients(ideal, nullptr, deadline);
}

LinearQuotientsResult verify_linear_quotients(const CBounded& spec,
                                              const Deadline* deadline) {
  MonomialIdeal ideal = generators(spec);
  return check_quotients(ideal, &spec, deadline);
}

std::vector<long long> betti_numbers(const CBounded& spec) {
  MonomialIdeal ideal = generators(spec);
  if (ideal.empty())
    throw std::invalid_argument("betti_numbers: family is empty");
  std::vector<int> sizes;
  sizes.reserve(ideal.size());
  int pd = 0;
  for (const Monomial& u : ideal.gens) {
    int s = static_cast<int>(quotient_set(u, spec).size());
    sizes.push_back(s);
    pd = std::max(pd, s);
  }
  std::vector<long long> betti(static_cast<std::size_t>(pd) + 1, 0);
  for (int s : sizes)
    for (int i = 0; i <= s; ++i)
      betti[static_cast<std::size_t>(i)] += binomial(s, i);
  return betti;
}

int projective_dimension(const CBounded& spec) {
  MonomialIdeal ideal = generators(spec);
  if (ideal.empty())
    throw std::invalid_argument("projective_dimension: family is empty");
  int pd = 0;
  for (const Monomial& u : ideal.gens)
    pd = std::max(pd, static_cast<int>(quotient_set(u, spec).size()));
  return pd;
}

int regularity_cbounded(const CBounded& spec) {
  if (!family_nonempty(spec))
    throw std::invalid_argument("regularity_cbounded: family is empty");
  return spec.d;
}

}  // namespace tspread
