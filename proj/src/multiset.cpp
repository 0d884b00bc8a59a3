#include "tspread/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tspread {

Multiset make_multiset(std::vector<int> elems, int ambient) {
  if (elems.empty()) throw std::invalid_argument("multiset must be nonempty");
  if (ambient < 1) throw std::invalid_argument("ambient must be positive");
  int prev = 0;
  for (int v : elems) {
    if (v < 1 || v > ambient)
      throw std::invalid_argument("multiset element outside [1, ambient]");
    if (v < prev)
      throw std::invalid_argument("multiset must be weakly increasing");
    prev = v;
  }
  return Multiset{std::move(elems), ambient};
}

bool is_t_spread(const Multiset& a, int t) {
  for (std::size_t i = 1; i < a.elems.size(); ++i)
    if (a.elems[i] - a.elems[i - 1] < t) return false;
  return true;
}

std::vector<Block> block_decomposition(const Multiset& a, int t) {
  if (!is_t_spread(a, t))
    throw std::invalid_argument("block_decomposition: input is not t-spread");
  std::vector<Block> blocks;
  Block current{0, {a.elems.front()}};
  for (std::size_t i = 1; i < a.elems.size(); ++i) {
    if (a.elems[i] - a.elems[i - 1] == t) {
      current.elems.push_back(a.elems[i]);
    } else {
      blocks.push_back(std::move(current));
      current = Block{static_cast<int>(i), {a.elems[i]}};
    }
  }
  blocks.push_back(std::move(current));
  return blocks;
}

int block_type(const Multiset& a, int t) {
  if (!is_t_spread(a, t))
    throw std::invalid_argument("block_type: input is not t-spread");
  int count = 1;
  for (std::size_t i = 1; i < a.elems.size(); ++i)
    if (a.elems[i] - a.elems[i - 1] != t) ++count;
  return count;
}

bool is_c_bounded(const Multiset& a, int t, int c) {
  if (!is_t_spread(a, t))
    throw std::invalid_argument("is_c_bounded: input is not t-spread");
  int run = 1;
  for (std::size_t i = 1; i < a.elems.size(); ++i) {
    run = (a.elems[i] - a.elems[i - 1] == t) ? run + 1 : 1;
    if (run > c) return false;
  }
  return run <= c;
}

Multiset stretch(const Multiset& a) {
  std::vector<int> out(a.elems.size());
  for (std::size_t j = 0; j < a.elems.size(); ++j)
    out[j] = a.elems[j] + static_cast<int>(j);
  return Multiset{std::move(out), a.ambient + a.size() - 1};
}

Multiset shrink(const Multiset& a) {
  std::vector<int> out(a.elems.size());
  int prev = 0;
  for (std::size_t j = 0; j < a.elems.size(); ++j) {
    if (j > 0 && a.elems[j] <= a.elems[j - 1])
      throw std::invalid_argument("shrink: input must be strictly increasing");
    out[j] = a.elems[j] - static_cast<int>(j);
    if (out[j] < prev || out[j] < 1)
      throw std::invalid_argument("shrink: result leaves the valid range");
    prev = out[j];
  }
  int ambient = a.ambient - a.size() + 1;
  if (out.back() > ambient)
    throw std::invalid_argument("shrink: result leaves the valid range");
  return Multiset{std::move(out), ambient};
}

Multiset stretch_pow(Multiset a, int times) {
  for (int i = 0; i < times; ++i) a = stretch(a);
  return a;
}

Multiset shrink_pow(Multiset a, int times) {
  for (int i = 0; i < times; ++i) a = shrink(a);
  return a;
}

bool seq_less(const Multiset& a, const Multiset& b) {
  return std::lexicographical_compare(a.elems.begin(), a.elems.end(),
                                      b.elems.begin(), b.elems.end());
}

std::string to_string(const Multiset& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.elems.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(a.elems[i]);
  }
  out += "}";
  return out;
}

namespace {

void skip_spaces(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

int parse_int(std::string_view& s, const char* what) {
  skip_spaces(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data())
    throw std::invalid_argument(std::string("expected integer in ") + what);
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

Multiset parse_multiset(std::string_view text, int ambient) {
  std::string_view s = text;
  skip_spaces(s);
  if (s.empty() || s.front() != '{')
    throw std::invalid_argument("multiset must start with '{'");
  s.remove_prefix(1);
  std::vector<int> elems;
  skip_spaces(s);
  if (!s.empty() && s.front() == '}') {
    throw std::invalid_argument("multiset must be nonempty");
  }
  while (true) {
    elems.push_back(parse_int(s, "multiset"));
    skip_spaces(s);
    if (s.empty()) throw std::invalid_argument("multiset must end with '}'");
    if (s.front() == ',') {
      s.remove_prefix(1);
      continue;
    }
    if (s.front() == '}') {
      s.remove_prefix(1);
      break;
    }
    throw std::invalid_argument("unexpected character in multiset");
  }
  skip_spaces(s);
  if (!s.empty()) throw std::invalid_argument("trailing characters after multiset");
  return make_multiset(std::move(elems), ambient);
}

}  // namespace tspread
