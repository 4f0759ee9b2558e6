#include "racov/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace racov::io {

codes::GeneratorMatrix read_matrix(std::istream& in) {
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body << line << '\n';
  }
  std::istringstream tokens(body.str());
  std::uint64_t q = 0, k = 0, n = 0;
  if (!(tokens >> q >> k >> n)) throw std::invalid_argument("matrix header must be 'q k n'");
  if (k == 0 || n == 0) throw std::invalid_argument("matrix dimensions must be positive");
  auto field = gf::Field::of_order(q);

  std::vector<codes::Vector> cols(n, codes::Vector(k, 0));
  for (std::uint64_t r = 0; r < k; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      long long v = 0;
      if (!(tokens >> v)) throw std::invalid_argument("matrix body truncated at row " + std::to_string(r + 1));
      if (v < 0 || static_cast<std::uint64_t>(v) >= q) throw std::invalid_argument("entry " + std::to_string(v) + " outside [0, q)");
      cols[c][r] = static_cast<gf::Element>(v);
    }
  }
  std::string extra;
  if (tokens >> extra) throw std::invalid_argument("unexpected trailing data in matrix file");
  return codes::GeneratorMatrix::from_expanded(field, k, cols);
}

codes::GeneratorMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const codes::GeneratorMatrix& g) {
  const auto cols = g.expanded();
  out << g.field().q() << ' ' << g.k() << ' ' << g.n() << '\n';
  for (std::size_t r = 0; r < g.k(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? " " : "") << cols[c][r];
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const codes::GeneratorMatrix& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file " + path);
  write_matrix(out, g);
}

}  // namespace racov::io
