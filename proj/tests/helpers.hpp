#pragma once
// Fixtures and independent oracles shared by the test binaries.
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "racov/bignum.hpp"
#include "racov/codes.hpp"
#include "racov/linalg.hpp"

namespace testing {

using racov::BigInt;
using racov::Rational;
using racov::codes::GeneratorMatrix;
using racov::linalg::Vector;

// Matrix from k rows of n entries, columns expanded.
inline GeneratorMatrix from_rows(const racov::gf::Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<Vector> cols(rows.front().size(), Vector(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) cols[c][r] = rows[r][c];
  std::vector<racov::codes::Column> out;
  for (auto& c : cols) out.push_back({c, 1});
  return GeneratorMatrix(f, rows.size(), out);
}

inline GeneratorMatrix example1(const racov::gf::Field& f) {
  return from_rows(f, {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}});
}

inline GeneratorMatrix identity(const racov::gf::Field& f, std::size_t k) {
  std::vector<racov::codes::Column> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back({racov::codes::unit_vector(k, i), 1});
  return GeneratorMatrix(f, k, cols);
}

// Rank by textbook elimination, forward pivot order, fresh copy per call.
inline std::size_t naive_rank(const racov::gf::Field& f, std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t dim = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < dim && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto inv = f.inv(rows[rank][c]);
    for (auto& e : rows[rank]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto factor = rows[r][c];
      for (std::size_t j = 0; j < dim; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

inline bool naive_contains(const racov::gf::Field& f, const std::vector<Vector>& cols, const Vector& t) {
  auto with = cols;
  with.push_back(t);
  return naive_rank(f, cols) == naive_rank(f, with);
}

// alpha_i^s for s = 0..n by looping over every bit mask.
inline std::vector<std::uint64_t> oracle_alpha(const GeneratorMatrix& g, std::size_t strand) {
  const auto cols = g.expanded();
  const std::size_t n = cols.size();
  const auto target = racov::codes::unit_vector(g.k(), strand);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vector> chosen;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1) chosen.push_back(cols[j]);
    if (naive_contains(g.field(), chosen, target)) ++counts[chosen.size()];
  }
  return counts;
}

// n H_n - sum_s alpha_s / C(n-1, s) with binomials from Pascal's rule.
inline Rational oracle_expectation(const std::vector<std::uint64_t>& counts) {
  const std::size_t n = counts.size() - 1;
  std::vector<BigInt> row(n, 0);
  row[0] = 1;
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t t = r; t >= 1; --t) row[t] += row[t - 1];
  Rational h = 0;
  for (std::size_t j = 1; j <= n; ++j) h += Rational(1, j);
  Rational e = Rational(n) * h;
  for (std::size_t s = 1; s < n; ++s) e -= Rational(BigInt(counts[s]), row[s]);
  return e;
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

inline std::string data_path(const std::string& name) { return std::string(RACOV_TEST_DATA) + "/" + name; }

}  // namespace testing
