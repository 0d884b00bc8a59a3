#pragma once

#include <string>

#include "tspread/ideal.hpp"

namespace tspread {

/// Script declaring a rational polynomial ring in x1..xn with
/// degree-reverse-lexicographic order, followed by the generator list,
/// ready to paste into an external computer-algebra system:
///
///   ring R = 0, (x1,x2,x3), dp;
///   ideal I = x1*x2, x1*x3;
///
/// The empty ideal prints as `ideal I = 0;`.
std::string singular_script(const MonomialIdeal& ideal);

void write_file(const std::string& path, const std::string& contents);

/// One monomial per line in the x1^2*x3 text form; blank lines and lines
/// starting with '#' are skipped. With ambient = 0 the ring size is the
/// largest index seen.
MonomialIdeal read_generators_file(const std::string& path, int ambient = 0);

}  // namespace tspread
