#include "tspread/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tspread {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial make_monomial(std::vector<int> exponents) {
  if (exponents.empty())
    throw std::invalid_argument("monomial needs a positive ambient");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  return Monomial{std::move(exponents)};
}

Monomial unit_monomial(int ambient) {
  if (ambient < 1) throw std::invalid_argument("ambient must be positive");
  return Monomial{std::vector<int>(static_cast<std::size_t>(ambient), 0)};
}

Monomial variable(int ambient, int index) {
  Monomial u = unit_monomial(ambient);
  if (index < 1 || index > ambient)
    throw std::invalid_argument("variable index outside [1, ambient]");
  u.exponents[static_cast<std::size_t>(index - 1)] = 1;
  return u;
}

Monomial monomial_of(const Multiset& a) {
  Monomial u = unit_monomial(a.ambient);
  for (int v : a.elems) ++u.exponents[static_cast<std::size_t>(v - 1)];
  return u;
}

Multiset multiset_of(const Monomial& u) {
  std::vector<int> elems;
  for (int i = 0; i < u.ambient(); ++i)
    for (int rep = 0; rep < u.exponents[static_cast<std::size_t>(i)]; ++rep)
      elems.push_back(i + 1);
  return make_multiset(std::move(elems), u.ambient());
}

std::vector<int> support(const Monomial& u) {
  std::vector<int> out;
  for (int i = 0; i < u.ambient(); ++i)
    if (u.exponents[static_cast<std::size_t>(i)] > 0) out.push_back(i + 1);
  return out;
}

int min_index(const Monomial& u) {
  for (int i = 0; i < u.ambient(); ++i)
    if (u.exponents[static_cast<std::size_t>(i)] > 0) return i + 1;
  return 0;
}

int max_index(const Monomial& u) {
  for (int i = u.ambient() - 1; i >= 0; --i)
    if (u.exponents[static_cast<std::size_t>(i)] > 0) return i + 1;
  return 0;
}

bool divides(const Monomial& u, const Monomial& v) {
  for (std::size_t i = 0; i < u.exponents.size(); ++i)
    if (u.exponents[i] > v.exponents[i]) return false;
  return true;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  Monomial out = u;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::min(out.exponents[i], v.exponents[i]);
  return out;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  Monomial out = u;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::max(out.exponents[i], v.exponents[i]);
  return out;
}

Monomial product(const Monomial& u, const Monomial& v) {
  Monomial out = u;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] += v.exponents[i];
  return out;
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  Monomial out = u;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    out.exponents[i] -= v.exponents[i];
    if (out.exponents[i] < 0)
      throw std::invalid_argument("quotient: divisor does not divide");
  }
  return out;
}

Monomial colon_generator(const Monomial& g, const Monomial& u) {
  Monomial out = g;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::max(0, g.exponents[i] - u.exponents[i]);
  return out;
}

Monomial exchange(const Monomial& u, int into, int outof) {
  Monomial out = u;
  auto& eo = out.exponents[static_cast<std::size_t>(outof - 1)];
  if (eo == 0) throw std::invalid_argument("exchange: x_outof does not divide");
  --eo;
  ++out.exponents[static_cast<std::size_t>(into - 1)];
  return out;
}

bool lex_greater(const Monomial& u, const Monomial& v) {
  return std::lexicographical_compare(v.exponents.begin(), v.exponents.end(),
                                      u.exponents.begin(), u.exponents.end());
}

std::string to_string(const Monomial& u) {
  std::string out;
  for (int i = 0; i < u.ambient(); ++i) {
    int e = u.exponents[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

void skip_spaces(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

int parse_int(std::string_view& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data())
    throw std::invalid_argument("expected integer in monomial");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int ambient) {
  std::string_view s = text;
  skip_spaces(s);
  if (s.empty()) throw std::invalid_argument("empty monomial");
  if (s.front() == '1') {
    s.remove_prefix(1);
    skip_spaces(s);
    if (!s.empty()) throw std::invalid_argument("trailing characters after 1");
    return unit_monomial(ambient);
  }
  Monomial u = unit_monomial(ambient);
  while (true) {
    skip_spaces(s);
    if (s.empty() || s.front() != 'x')
      throw std::invalid_argument("expected 'x<index>' in monomial");
    s.remove_prefix(1);
    int index = parse_int(s);
    if (index < 1 || index > ambient)
      throw std::invalid_argument("variable index outside [1, ambient]");
    int e = 1;
    if (!s.empty() && s.front() == '^') {
      s.remove_prefix(1);
      e = parse_int(s);
      if (e < 1) throw std::invalid_argument("exponent must be positive");
    }
    u.exponents[static_cast<std::size_t>(index - 1)] += e;
    skip_spaces(s);
    if (s.empty()) break;
    if (s.front() != '*')
      throw std::invalid_argument("expected '*' between factors");
    s.remove_prefix(1);
  }
  return u;
}

std::size_t MonomialHash::operator()(const Monomial& u) const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (int e : u.exponents) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tspread
