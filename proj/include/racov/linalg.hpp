#pragma once
// Incremental Gaussian elimination over GF(q) for small dimensions.
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "racov/gf.hpp"

namespace racov::linalg {

using gf::Element;
using Vector = std::vector<Element>;

inline constexpr std::size_t kMaxDim = 16;

// Span of the vectors inserted so far, kept in reduced row echelon form:
// each basis row has a leading 1 at its pivot and every other row is zero there.
// Trivially copyable so enumeration can snapshot it per tree level.
class SpanTracker {
 public:
  SpanTracker(const gf::Field& field, std::size_t dim);

  // Returns true iff the rank grew. The pointer must address dim() entries.
  bool insert(const Element* v);
  bool insert(std::span<const Element> v) { return insert(v.data()); }

  bool contains(std::span<const Element> v) const;
  // e_i lies in the span iff some RREF row equals e_i exactly.
  bool contains_unit(std::size_t i) const { return (unit_mask_ >> i) & 1U; }
  std::uint32_t unit_mask() const { return unit_mask_; }
  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(Element* w) const;

  const gf::Field* field_;
  std::size_t dim_;
  std::size_t rank_ = 0;
  std::uint32_t unit_mask_ = 0;
  std::array<std::uint8_t, kMaxDim> pivot_{};
  std::array<std::array<Element, kMaxDim>, kMaxDim> rows_{};
};

// Rank by a separate full row reduction that chooses pivots from the last
// coordinate down; used as an independent check on SpanTracker.
std::size_t rank_by_row_reduction(const gf::Field& field, std::span<const Vector> vectors, std::size_t dim);

}  // namespace racov::linalg
