#pragma once

#include "toric/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Matrix file: a line "d n", then d rows of n integers, then optionally a
/// line "labels: <n tokens>". Blank lines and '#' comments are skipped.
Configuration parse_configuration(std::string_view text);
Configuration read_configuration(const std::string& path);
/// Always writes the labels line, so parse(format(a)) == a.
std::string format_configuration(const Configuration& a);

/// Parses "x1^2*x4 - x2^3" (either side may be "1") into u = u+ - u- over
/// the given variable names.
LatticeBinomial parse_binomial(std::string_view text, const std::vector<std::string>& labels);

/// Integer list "3,1,2" or "3 1 2".
std::vector<long> parse_int_list(std::string_view text);

}  // namespace toric
