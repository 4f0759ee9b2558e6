#pragma once
// Plain-text matrix format:
//   q k n
//   k rows of n whitespace-separated element values
// Lines starting with '#' are ignored. Columns are written expanded.
#include <iosfwd>
#include <string>

#include "racov/codes.hpp"

namespace racov::io {

codes::GeneratorMatrix read_matrix(std::istream& in);
codes::GeneratorMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const codes::GeneratorMatrix& g);
void write_matrix_file(const std::string& path, const codes::GeneratorMatrix& g);

}  // namespace racov::io
