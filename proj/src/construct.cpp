#include "racov/construct.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "racov/errors.hpp"
#include "racov/linalg.hpp"
#include "racov/parallel.hpp"

namespace racov::construct {

ExponentSet sum_free_set(std::uint64_t n, std::size_t size) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("sum_free_set needs an odd modulus");
  if (size > (n - 1) / 3)
    throw std::invalid_argument("sum-free set of size " + std::to_string(size) + " unattainable mod " +
                                std::to_string(n));
  ExponentSet out{n, {}, 3};
  for (std::uint64_t t = n / 3 + 1; out.elements.size() < size; ++t) out.elements.push_back(t);
  if (!is_sum_free(out)) throw std::logic_error("middle-third set failed the sum-free check");
  return out;
}

bool is_sum_free(const ExponentSet& set) {
  const auto& e = set.elements;
  for (auto r : e)
    for (auto l : e)
      if (std::binary_search(e.begin(), e.end(), (r + l) % set.modulus)) return false;
  return true;
}

namespace {

struct SignedSubsetChecker {
  const std::vector<std::uint64_t>& elems;
  std::int64_t modulus;
  std::size_t max_size;

  bool ok(std::size_t from, std::size_t size, std::int64_t sum, bool plus, bool minus) const {
    if (size >= 2 && plus && minus && sum % modulus == 0) return false;
    if (size == max_size) return true;
    for (std::size_t j = from; j < elems.size(); ++j) {
      const auto e = static_cast<std::int64_t>(elems[j]);
      if (!ok(j + 1, size + 1, sum + e, true, minus)) return false;
      // The first element's sign can be fixed to + by symmetry.
      if (size > 0 && !ok(j + 1, size + 1, sum - e, plus, true)) return false;
    }
    return true;
  }
};

}  // namespace

bool satisfies_mixed_sign_condition(const std::vector<std::uint64_t>& elements, std::uint64_t modulus,
                                    std::size_t k) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  std::vector<std::uint64_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  SignedSubsetChecker checker{sorted, static_cast<std::int64_t>(modulus), k};
  return checker.ok(0, 0, 0, false, false);
}

namespace {

// Residues c must avoid: sum(B) - sum(A) over disjoint subsets of the chosen
// elements with B nonempty and |A| + |B| <= k - 1.
class ForbiddenSet {
 public:
  ForbiddenSet(std::uint64_t modulus, std::size_t k) : m_(static_cast<std::int64_t>(modulus)), k_(k), bad_(modulus, 0) {}

  bool allowed(std::uint64_t c) const { return !bad_[c]; }

  void add(std::uint64_t c) {
    const auto ci = static_cast<std::int64_t>(c);
    const std::size_t limit = k_ >= 2 ? k_ - 2 : 0;
    mark_extensions(ci, 0, 0, 0, false, limit);
    chosen_.push_back(ci);
  }

  std::size_t size() const { return chosen_.size(); }

 private:
  void mark(std::int64_t r) { bad_[static_cast<std::size_t>(((r % m_) + m_) % m_)] = 1; }

  // Walks signed subsets W of earlier elements with |W| <= limit; w is their
  // signed sum and `plus` records whether W has a + element.
  void mark_extensions(std::int64_t c, std::size_t from, std::size_t size, std::int64_t w, bool plus,
                       std::size_t limit) {
    mark(c + w);
    if (plus) mark(w - c);
    if (size == limit) return;
    for (std::size_t j = from; j < chosen_.size(); ++j) {
      mark_extensions(c, j + 1, size + 1, (w + chosen_[j]) % m_, true, limit);
      mark_extensions(c, j + 1, size + 1, (w - chosen_[j]) % m_, plus, limit);
    }
  }

  std::int64_t m_;
  std::size_t k_;
  std::vector<char> bad_;
  std::vector<std::int64_t> chosen_;
};

}  // namespace

ExponentSet bk_set_search(std::size_t k, std::uint64_t q, std::size_t size) {
  if (k < 2) throw std::invalid_argument("bk_set_search needs k >= 2");
  if (q < 2 || q > gf::kMaxOrder) throw std::invalid_argument("field order out of range");
  ExponentSet out{q - 1, {}, k};
  if (size == 0) return out;
  ForbiddenSet forbidden(q - 1, k);
  for (std::uint64_t c = 0; c + 1 < q && out.elements.size() < size; ++c) {
    if (!forbidden.allowed(c)) continue;
    forbidden.add(c);
    out.elements.push_back(c);
  }
  if (out.elements.size() < size)
    throw SearchError("B_h search over Z_" + std::to_string(q - 1) + " found only " +
                      std::to_string(out.elements.size()) + " of " + std::to_string(size) + " elements");
  return out;
}

FieldChoice find_field(std::size_t k, std::size_t size) {
  for (std::uint32_t m = 1; (std::uint64_t{1} << m) <= gf::kMaxOrder; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    if (q - 1 < size) continue;
    try {
      ExponentSet exps = bk_set_search(k, q, size);
      return {gf::Field::build(2, m), std::move(exps)};
    } catch (const SearchError&) {
    }
  }
  throw SearchError("no field of order <= 2^24 admits " + std::to_string(size) + " exponents for k = " +
                    std::to_string(k));
}

codes::GeneratorMatrix build_from_blocks(const gf::Field& field, std::size_t k, std::uint64_t y,
                                         const std::vector<EdgeBlock>& blocks) {
  if (k < 1 || k > linalg::kMaxDim) throw std::invalid_argument("k out of range");
  if (y < 1) throw std::invalid_argument("y must be at least 1");
  std::vector<codes::Column> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back({codes::unit_vector(k, i), y});
  for (const auto& b : blocks) {
    if (b.i >= b.j || b.j >= k) throw std::invalid_argument("edge block needs 0 <= i < j < k");
    const std::size_t first = cols.size();
    for (auto t : b.exponents) {
      if (t >= field.q() - 1) throw std::invalid_argument("exponent out of range for the field");
      linalg::Vector v(k, 0);
      v[b.i] = 1;
      v[b.j] = field.beta_pow(static_cast<std::int64_t>(t));
      auto same = std::find_if(cols.begin() + static_cast<std::ptrdiff_t>(first), cols.end(),
                               [&](const codes::Column& c) { return c.vector == v; });
      if (same != cols.end())
        ++same->multiplicity;
      else
        cols.push_back({std::move(v), 1});
    }
  }
  return codes::GeneratorMatrix(field, k, std::move(cols));
}

std::vector<EdgeBlock> lexicographic_blocks(std::size_t k, std::uint64_t x, const std::vector<std::uint64_t>& exponents) {
  if (exponents.size() < x * (k * (k - 1) / 2)) throw std::invalid_argument("insufficient exponents");
  std::vector<EdgeBlock> blocks;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      EdgeBlock b{i, j, {}};
      for (std::uint64_t t = 0; t < x; ++t) b.exponents.push_back(exponents[next++]);
      blocks.push_back(std::move(b));
    }
  return blocks;
}

ConstructionParams default_params(std::size_t k, std::uint64_t x, std::uint64_t y) {
  if (k < 2) throw std::invalid_argument("construction needs k >= 2");
  auto choice = find_field(k, x * (k * (k - 1) / 2));
  return {k, x, y, choice.field, std::move(choice.exponents)};
}

ConstructionParams params_for_field(std::size_t k, std::uint64_t x, std::uint64_t y, std::uint64_t q) {
  if (k < 2) throw std::invalid_argument("construction needs k >= 2");
  auto field = gf::Field::of_order(q);
  if (k >= 3 && !field.characteristic_two())
    throw std::invalid_argument("construction for k >= 3 needs a field of characteristic 2");
  auto exps = bk_set_search(k, q, x * (k * (k - 1) / 2));
  return {k, x, y, field, std::move(exps)};
}

namespace {

void check_params(std::size_t k, const gf::Field& field, const ExponentSet& exps, std::uint64_t x) {
  if (k >= 3 && !field.characteristic_two())
    throw std::invalid_argument("construction for k >= 3 needs a field of characteristic 2");
  if (exps.modulus != field.q() - 1) throw std::invalid_argument("exponent set modulus differs from q - 1");
  if (exps.elements.size() < x * (k * (k - 1) / 2)) throw std::invalid_argument("insufficient exponents");
}

}  // namespace

codes::GeneratorMatrix build_g3(std::uint64_t x, const gf::Field& field, const ExponentSet& exps, std::uint64_t y) {
  check_params(3, field, exps, x);
  return build_from_blocks(field, 3, y, lexicographic_blocks(3, x, exps.elements));
}

codes::GeneratorMatrix build_gk(const ConstructionParams& p) {
  if (p.k < 2) throw std::invalid_argument("construction needs k >= 2");
  check_params(p.k, p.field, p.exponents, p.x);
  return build_from_blocks(p.field, p.k, p.y, lexicographic_blocks(p.k, p.x, p.exponents.elements));
}

namespace {

// Simple cycles of K_k of length >= 3, each once: the smallest vertex first
// and the second vertex smaller than the last.
void collect_cycles(std::size_t k, std::vector<std::size_t>& path, std::vector<char>& used,
                    std::vector<std::vector<std::size_t>>& out) {
  if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
  for (std::size_t v = path.front() + 1; v < k; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    path.push_back(v);
    collect_cycles(k, path, used, out);
    path.pop_back();
    used[v] = 0;
  }
}

}  // namespace

RecoveryCertificate verify_recovery_complete(const codes::GeneratorMatrix& g) {
  const std::size_t k = g.k();
  if (k > kMaxVerifyDim) throw GuardError("recovery-completeness check needs k <= 8");
  const auto& field = g.field();
  const auto cols = g.expanded();

  // blocks[a * k + b] lists the expanded columns supported on {a, b}.
  std::vector<std::vector<std::size_t>> blocks(k * k);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < k; ++c)
      if (cols[idx][c] != 0) support.push_back(c);
    if (support.size() > 2) throw std::invalid_argument("column " + std::to_string(idx + 1) + " has weight > 2");
    if (support.size() == 2) blocks[support[0] * k + support[1]].push_back(idx);
  }
  auto block = [&](std::size_t a, std::size_t b) -> const std::vector<std::size_t>& {
    return a < b ? blocks[a * k + b] : blocks[b * k + a];
  };

  RecoveryCertificate cert;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& e = block(a, b);
      for (std::size_t u = 0; u < e.size(); ++u)
        for (std::size_t v = u + 1; v < e.size(); ++v) {
          const auto& cu = cols[e[u]];
          const auto& cv = cols[e[v]];
          if (field.sub(field.mul(cu[a], cv[b]), field.mul(cu[b], cv[a])) == 0) {
            cert.complete = false;
            cert.failure = RecoveryCertificate::Failure::edge_pair;
            cert.columns = {e[u], e[v]};
            return cert;
          }
        }
    }

  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t s = 0; s + 2 < k; ++s) {
    std::vector<std::size_t> path{s};
    std::vector<char> used(k, 0);
    used[s] = 1;
    collect_cycles(k, path, used, cycles);
  }
  std::uint64_t work = 0;
  for (const auto& cyc : cycles) {
    std::uint64_t prod = 1;
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      prod *= block(cyc[t], cyc[(t + 1) % cyc.size()]).size();
      if (prod > kMaxVerifyWork) break;
    }
    work += prod;
    if (work > kMaxVerifyWork) throw GuardError("recovery-completeness check exceeds its work guard");
  }

  const auto count = static_cast<std::int64_t>(cycles.size());
  std::atomic<std::int64_t> first_bad{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::vector<std::size_t>> witness(cycles.size());

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (std::int64_t ci = 0; ci < count; ++ci) {
    if (ci > first_bad.load(std::memory_order_relaxed)) continue;
    const auto& cyc = cycles[static_cast<std::size_t>(ci)];
    const std::size_t m = cyc.size();
    std::vector<const std::vector<std::size_t>*> edges(m);
    bool empty = false;
    for (std::size_t t = 0; t < m; ++t) {
      edges[t] = &block(cyc[t], cyc[(t + 1) % m]);
      empty = empty || edges[t]->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      linalg::SpanTracker span(field, k);
      bool independent = true;
      for (std::size_t t = 0; t < m && independent; ++t) independent = span.insert(cols[(*edges[t])[pick[t]]]);
      if (!independent) {
        for (std::size_t t = 0; t < m; ++t) witness[static_cast<std::size_t>(ci)].push_back((*edges[t])[pick[t]]);
        std::int64_t cur = first_bad.load();
        while (ci < cur && !first_bad.compare_exchange_weak(cur, ci)) {
        }
        break;
      }
      std::size_t t = 0;
      while (t < m && ++pick[t] == edges[t]->size()) pick[t++] = 0;
      if (t == m) break;
    }
  }

  const std::int64_t bad = first_bad.load();
  if (bad != std::numeric_limits<std::int64_t>::max()) {
    cert.complete = false;
    cert.failure = RecoveryCertificate::Failure::cycle;
    cert.columns = witness[static_cast<std::size_t>(bad)];
    cert.cycle = cycles[static_cast<std::size_t>(bad)];
  }
  return cert;
}

}  // namespace racov::construct
