#include "tspread/io.hpp"

#include <fstream>
#include <stdexcept>

namespace tspread {

std::string singular_script(const MonomialIdeal& ideal) {
  std::string vars;
  for (int i = 1; i <= ideal.ambient; ++i) {
    if (i > 1) vars += ",";
    vars += "x" + std::to_string(i);
  }
  std::string script = "ring R = 0, (" + vars + "), dp;\n";
  if (ideal.empty()) {
    script += "ideal I = 0;\n";
    return script;
  }
  script += "ideal I = ";
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    if (i > 0) script += ", ";
    script += to_string(ideal.gens[i]);
  }
  script += ";\n";
  return script;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

MonomialIdeal read_generators_file(const std::string& path, int ambient) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(start, end - start + 1);
    if (token.empty() || token.front() == '#') continue;
    lines.push_back(std::move(token));
  }
  if (ambient == 0) {
    // Two passes: find the largest variable index, then parse for real.
    for (const std::string& token : lines) {
      std::size_t pos = 0;
      while ((pos = token.find('x', pos)) != std::string::npos) {
        ++pos;
        int idx = 0;
        while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9')
          idx = idx * 10 + (token[pos++] - '0');
        ambient = std::max(ambient, idx);
      }
    }
    if (ambient == 0) ambient = 1;  // only constants present
  }
  std::vector<Monomial> gens;
  gens.reserve(lines.size());
  for (const std::string& token : lines)
    gens.push_back(parse_monomial(token, ambient));
  return make_ideal(ambient, std::move(gens));
}

}  // namespace tspread
