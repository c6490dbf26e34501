#pragma once

// Plain-text matrix files: first line "n", then n rows of n
// whitespace-separated decimal reals.

#include <iosfwd>
#include <string>
#include <vector>

#include "flagmodel/flagcore.hpp"

namespace flagmodel {

/// Throws ParseError on malformed input.
Matrix read_matrix_text(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// 17 significant digits, enough to reproduce every double exactly.
void write_matrix_text(std::ostream& out, const Matrix& m);

/// Comma-separated lists as used on the command line.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace flagmodel
