#include "racov/linalg.hpp"

#include <stdexcept>

namespace racov::linalg {

SpanTracker::SpanTracker(const gf::Field& field, std::size_t dim) : field_(&field), dim_(dim) {
  if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("span dimension must be in [1, 16]");
}

void SpanTracker::reduce(Element* w) const {
  for (std::size_t r = 0; r < rank_; ++r) {
    const Element c = w[pivot_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[r][j]) w[j] = field_->sub(w[j], field_->mul(c, rows_[r][j]));
  }
}

bool SpanTracker::insert(const Element* v) {
  if (rank_ == dim_) return false;
  std::array<Element, kMaxDim> w{};
  for (std::size_t j = 0; j < dim_; ++j) w[j] = v[j];
  reduce(w.data());

  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (w[j]) {
      piv = j;
      break;
    }
  }
  if (piv == dim_) return false;

  const Element s = field_->inv(w[piv]);
  for (std::size_t j = piv; j < dim_; ++j) w[j] = field_->mul(w[j], s);
  for (std::size_t r = 0; r < rank_; ++r) {
    const Element c = rows_[r][piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (w[j]) rows_[r][j] = field_->sub(rows_[r][j], field_->mul(c, w[j]));
  }
  rows_[rank_] = w;
  pivot_[rank_] = static_cast<std::uint8_t>(piv);
  ++rank_;

  unit_mask_ = 0;
  for (std::size_t r = 0; r < rank_; ++r) {
    bool unit = true;
    for (std::size_t j = 0; j < dim_ && unit; ++j)
      if (j != pivot_[r] && rows_[r][j]) unit = false;
    if (unit) unit_mask_ |= 1U << pivot_[r];
  }
  return true;
}

bool SpanTracker::contains(std::span<const Element> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match span dimension");
  std::array<Element, kMaxDim> w{};
  for (std::size_t j = 0; j < dim_; ++j) w[j] = v[j];
  reduce(w.data());
  for (std::size_t j = 0; j < dim_; ++j)
    if (w[j]) return false;
  return true;
}

std::size_t rank_by_row_reduction(const gf::Field& field, std::span<const Vector> vectors, std::size_t dim) {
  std::vector<Vector> m(vectors.begin(), vectors.end());
  for (const auto& v : m)
    if (v.size() != dim) throw std::invalid_argument("vector length does not match dimension");
  std::size_t rank = 0;
  for (std::size_t col = dim; col-- > 0 && rank < m.size();) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const Element s = field.inv(m[rank][col]);
    for (auto& e : m[rank]) e = field.mul(e, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Element c = m[r][col];
      for (std::size_t j = 0; j < dim; ++j) m[r][j] = field.sub(m[r][j], field.mul(c, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace racov::linalg
