#include "racov/codes.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace racov::codes {

GeneratorMatrix::GeneratorMatrix(gf::Field field, std::size_t k, std::vector<Column> columns)
    : field_(std::move(field)), k_(k), columns_(std::move(columns)) {
  if (k_ == 0 || k_ > linalg::kMaxDim) throw std::invalid_argument("k must be in [1, 16]");
  linalg::SpanTracker span(field_, k_);
  for (const auto& c : columns_) {
    if (c.vector.size() != k_) throw std::invalid_argument("column length differs from k");
    if (c.multiplicity == 0) throw std::invalid_argument("column multiplicity must be >= 1");
    bool nonzero = false;
    for (auto e : c.vector) {
      if (e >= field_.q()) throw std::invalid_argument("entry " + std::to_string(e) + " is not an element of GF(" + std::to_string(field_.q()) + ")");
      nonzero = nonzero || e != 0;
    }
    if (!nonzero) throw std::invalid_argument("zero column");
    span.insert(c.vector);
    n_ += c.multiplicity;
  }
  if (span.rank() != k_) throw std::invalid_argument("generator matrix is not full rank");
}

GeneratorMatrix GeneratorMatrix::from_expanded(gf::Field field, std::size_t k, const std::vector<Vector>& columns) {
  std::vector<Column> merged;
  std::map<Vector, std::size_t> index;
  for (const auto& v : columns) {
    auto [it, fresh] = index.emplace(v, merged.size());
    if (fresh)
      merged.push_back({v, 1});
    else
      ++merged[it->second].multiplicity;
  }
  return GeneratorMatrix(std::move(field), k, std::move(merged));
}

std::vector<Vector> GeneratorMatrix::expanded() const {
  std::vector<Vector> out;
  out.reserve(n_);
  for (const auto& c : columns_)
    for (std::uint64_t r = 0; r < c.multiplicity; ++r) out.push_back(c.vector);
  return out;
}

Vector unit_vector(std::size_t k, std::size_t i) {
  Vector v(k, 0);
  v.at(i) = 1;
  return v;
}

Vector canonical(const gf::Field& field, Vector v) {
  for (auto e : v) {
    if (e == 0) continue;
    const Element s = field.inv(e);
    for (auto& x : v) x = field.mul(x, s);
    break;
  }
  return v;
}

bool span_contains(const gf::Field& field, std::span<const Vector> columns, const Vector& target) {
  linalg::SpanTracker span(field, target.size());
  for (const auto& c : columns) {
    if (c.size() != target.size()) throw std::invalid_argument("dimension mismatch in span_contains");
    span.insert(c);
  }
  return span.contains(target);
}

namespace {

void require_k2(const GeneratorMatrix& g) {
  if (g.k() != 2) throw std::invalid_argument("operation requires k = 2");
}

enum class Kind { first, second, slope };

struct Classified {
  Kind kind;
  std::uint32_t slope = 0;
};

Classified classify(const gf::Field& f, const Vector& v) {
  if (v[1] == 0) return {Kind::first};
  if (v[0] == 0) return {Kind::second};
  return {Kind::slope, f.discrete_log(f.div(v[1], v[0]))};
}

}  // namespace

TwoDimProfile profile_k2(const GeneratorMatrix& g) {
  require_k2(g);
  const auto& f = g.field();
  TwoDimProfile pr;
  pr.a.assign(f.q() - 1, 0);
  for (const auto& c : g.columns()) {
    const auto cls = classify(f, c.vector);
    switch (cls.kind) {
      case Kind::first: pr.x1 += c.multiplicity; break;
      case Kind::second: pr.x2 += c.multiplicity; break;
      case Kind::slope: pr.a[cls.slope] += c.multiplicity; break;
    }
  }
  pr.x = g.n();
  return pr;
}

GeneratorMatrix matrix_from_profile(const gf::Field& field, const TwoDimProfile& profile) {
  if (profile.a.size() != field.q() - 1) throw std::invalid_argument("profile has wrong number of slope classes");
  std::vector<Column> cols;
  if (profile.x1) cols.push_back({{1, 0}, profile.x1});
  if (profile.x2) cols.push_back({{0, 1}, profile.x2});
  for (std::size_t i = 0; i < profile.a.size(); ++i)
    if (profile.a[i]) cols.push_back({{1, field.beta_pow(static_cast<std::int64_t>(i))}, profile.a[i]});
  return GeneratorMatrix(field, 2, std::move(cols));
}

GeneratorMatrix balance_info_columns(const GeneratorMatrix& g) {
  require_k2(g);
  std::vector<Column> cols = g.columns();
  for (const auto& c : g.columns()) {
    const auto& v = c.vector;
    if (v[1] == 0)
      cols.push_back({{0, v[0]}, c.multiplicity});
    else if (v[0] == 0)
      cols.push_back({{v[1], 0}, c.multiplicity});
    else
      cols.push_back(c);
  }
  return GeneratorMatrix(g.field(), 2, std::move(cols));
}

GeneratorMatrix balance_slope_columns(const GeneratorMatrix& g, std::size_t i, std::size_t j) {
  require_k2(g);
  const auto& f = g.field();
  if (i == j || i >= f.q() - 1 || j >= f.q() - 1) throw std::invalid_argument("slope classes must be distinct and in [0, q-2]");
  const auto pr = profile_k2(g);
  if (pr.a[i] == pr.a[j]) throw std::invalid_argument("a_i == a_j: swapping gives no strict improvement");
  std::vector<Column> cols = g.columns();
  for (const auto& c : g.columns()) {
    const auto cls = classify(f, c.vector);
    if (cls.kind == Kind::slope && (cls.slope == i || cls.slope == j)) {
      const auto other = static_cast<std::int64_t>(cls.slope == i ? j : i);
      cols.push_back({{c.vector[0], f.mul(c.vector[0], f.beta_pow(other))}, c.multiplicity});
    } else {
      cols.push_back(c);
    }
  }
  return GeneratorMatrix(f, 2, std::move(cols));
}

}  // namespace racov::codes
