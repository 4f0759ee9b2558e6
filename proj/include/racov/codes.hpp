#pragma once
// Generator matrices stored as column multisets over GF(q)^k.
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "racov/gf.hpp"
#include "racov/linalg.hpp"

namespace racov::codes {

using gf::Element;
using linalg::Vector;

struct Column {
  Vector vector;
  std::uint64_t multiplicity = 1;
};

class GeneratorMatrix {
 public:
  // Throws std::invalid_argument unless every column has length k, is nonzero,
  // has multiplicity >= 1, and the columns have rank k.
  GeneratorMatrix(gf::Field field, std::size_t k, std::vector<Column> columns);

  // Identical vectors are merged into one column, keeping first-occurrence order.
  static GeneratorMatrix from_expanded(gf::Field field, std::size_t k, const std::vector<Vector>& columns);

  const gf::Field& field() const { return field_; }
  std::size_t k() const { return k_; }
  std::uint64_t n() const { return n_; }
  const std::vector<Column>& columns() const { return columns_; }

  // n columns, each distinct column repeated by its multiplicity.
  std::vector<Vector> expanded() const;

 private:
  gf::Field field_;
  std::size_t k_;
  std::uint64_t n_ = 0;
  std::vector<Column> columns_;
};

// Standard basis vector e_i (0-based).
Vector unit_vector(std::size_t k, std::size_t i);

// Scales v so that its first nonzero coordinate is 1.
Vector canonical(const gf::Field& field, Vector v);

// Throws std::invalid_argument on a length mismatch.
bool span_contains(const gf::Field& field, std::span<const Vector> columns, const Vector& target);

// Column counts by collinearity class for k = 2. a[i] counts columns
// collinear with (1, beta^i).
struct TwoDimProfile {
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::vector<std::uint64_t> a;
  std::uint64_t x = 0;
};

TwoDimProfile profile_k2(const GeneratorMatrix& g);

// One representative column per class with the profile's counts.
GeneratorMatrix matrix_from_profile(const gf::Field& field, const TwoDimProfile& profile);

// G o G-bar where G-bar swaps the e_1- and e_2-collinear columns.
GeneratorMatrix balance_info_columns(const GeneratorMatrix& g);

// G o G-bar where G-bar swaps classes (1, beta^i) and (1, beta^j).
// Throws std::invalid_argument if a_i == a_j.
GeneratorMatrix balance_slope_columns(const GeneratorMatrix& g, std::size_t i, std::size_t j);

}  // namespace racov::codes
