#include "racov/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "racov/errors.hpp"
#include "racov/linalg.hpp"
#include "racov/parallel.hpp"

namespace racov::exact {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::closed_form_k2: return "closed_form_k2";
    case Method::closed_form_k4: return "closed_form_k4";
    case Method::monte_carlo: return "monte_carlo";
    case Method::asymptotic_bound: return "asymptotic_bound";
  }
  return "unknown";
}

namespace {

using linalg::SpanTracker;
using Counts = std::vector<std::uint64_t>;  // indexed by subset size

class SubsetEnumerator {
 public:
  SubsetEnumerator(const codes::GeneratorMatrix& g, std::size_t strand)
      : field_(g.field()), cols_(g.expanded()), n_(cols_.size()), strand_(strand) {
    if (strand >= g.k()) throw std::invalid_argument("strand index out of range");
    if (n_ > kMaxBruteforceColumns)
      throw GuardError("brute-force enumeration needs n <= 24, got n = " + std::to_string(n_));
    for (std::size_t r = 0; r <= n_; ++r) {
      binom_[r][0] = 1;
      for (std::size_t t = 1; t <= r; ++t) binom_[r][t] = binom_[r - 1][t - 1] + (t < r ? binom_[r - 1][t] : 0);
    }
  }

  std::size_t n() const { return n_; }
  SpanTracker root() const { return SpanTracker(field_, cols_.front().size()); }
  const linalg::Vector& column(std::size_t j) const { return cols_[j]; }
  bool recovered(const SpanTracker& s) const { return s.contains_unit(strand_); }

  // The chosen set (of size `size`) already spans e_i; every extension by
  // columns from index `next` on does too.
  void add_all_extensions(std::size_t next, std::size_t size, Counts& counts) const {
    const std::size_t r = n_ - next;
    for (std::size_t t = 0; t <= r; ++t) counts[size + t] += binom_[r][t];
  }

  // Extends the current set by columns next .. n-1, one index at a time.
  void descend(std::size_t next, std::size_t size, const SpanTracker& state, Counts& counts) const {
    for (std::size_t j = next; j < n_; ++j) {
      if (state.contains(cols_[j])) {
        descend(j + 1, size + 1, state, counts);
        continue;
      }
      SpanTracker child = state;
      child.insert(cols_[j]);
      if (recovered(child))
        add_all_extensions(j + 1, size + 1, counts);
      else
        descend(j + 1, size + 1, child, counts);
    }
  }

  AlphaProfile finish(const Counts& counts) const {
    AlphaProfile ap;
    ap.strand = strand_;
    ap.n = n_;
    ap.alpha.reserve(n_ ? n_ - 1 : 0);
    for (std::size_t s = 1; s < n_; ++s) ap.alpha.emplace_back(counts[s]);
    ap.harmonic_n = harmonic(n_);
    return ap;
  }

 private:
  gf::Field field_;
  std::vector<linalg::Vector> cols_;
  std::size_t n_;
  std::size_t strand_;
  std::uint64_t binom_[kMaxBruteforceColumns + 1][kMaxBruteforceColumns + 1] = {};
};

}  // namespace

namespace reference {

AlphaProfile alpha_bruteforce(const codes::GeneratorMatrix& g, std::size_t strand) {
  SubsetEnumerator en(g, strand);
  Counts counts(en.n() + 1, 0);
  en.descend(0, 0, en.root(), counts);
  return en.finish(counts);
}

}  // namespace reference

AlphaProfile alpha_bruteforce(const codes::GeneratorMatrix& g, std::size_t strand) {
  SubsetEnumerator en(g, strand);
  const std::size_t n = en.n();
  // Every subset splits as (pattern over the first `depth` columns) + (rest).
  const std::size_t depth = std::min<std::size_t>(n, 10);
  const std::int64_t patterns = std::int64_t{1} << depth;
  Counts total(n + 1, 0);

#pragma omp parallel num_threads(worker_count())
  {
    Counts local(n + 1, 0);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t mask = 0; mask < patterns; ++mask) {
      SpanTracker state = en.root();
      std::size_t size = 0;
      for (std::size_t j = 0; j < depth; ++j) {
        if ((mask >> j) & 1) {
          state.insert(en.column(j));
          ++size;
        }
      }
      if (size > 0 && en.recovered(state))
        en.add_all_extensions(depth, size, local);
      else
        en.descend(depth, size, state, local);
    }
#pragma omp critical
    for (std::size_t s = 0; s <= n; ++s) total[s] += local[s];
  }
  return en.finish(total);
}

Rational expectation_from_alpha(const AlphaProfile& ap) {
  const auto n = ap.n;
  Rational e = Rational(n) * ap.harmonic_n;
  BigInt c = 1;  // C(n-1, s)
  for (std::uint64_t s = 1; s < n; ++s) {
    c = c * (n - s) / s;
    e -= Rational(ap.at(s), c);
  }
  return e;
}

double expectation_value(const AlphaProfile& ap) {
  constexpr unsigned kBits = 256;
  const auto n = ap.n;
  const BigInt one = BigInt(1) << kBits;
  BigInt acc = 0;
  for (std::uint64_t j = 1; j <= n; ++j) acc += one * n / j;
  BigInt c = 1;
  for (std::uint64_t s = 1; s < n; ++s) {
    c = c * (n - s) / s;
    acc -= (ap.at(s) << kBits) / c;
  }
  return std::ldexp(static_cast<double>(acc), -static_cast<int>(kBits));
}

std::vector<Rational> bruteforce_expectations(const codes::GeneratorMatrix& g) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < g.k(); ++i) out.push_back(expectation_from_alpha(alpha_bruteforce(g, i)));
  return out;
}

ExpectationReport bruteforce_report(const codes::GeneratorMatrix& g) {
  ExpectationReport rep;
  rep.method = Method::bruteforce;
  const auto values = bruteforce_expectations(g);
  for (std::size_t i = 0; i < values.size(); ++i) {
    rep.strands.push_back(i);
    rep.expectation.push_back(to_double(values[i]));
    rep.std_error.push_back(0.0);
  }
  rep.t_max = *std::max_element(rep.expectation.begin(), rep.expectation.end());
  return rep;
}

namespace {

// C(top, s + offset) for s = 1, 2, ... advanced one step at a time.
class RunningBinomial {
 public:
  RunningBinomial(long long top, long long first_k) : top_(top), k_(first_k), value_(binomial(top, first_k)) {}
  const BigInt& value() const { return value_; }
  void advance() {
    if (k_ < 0) {
      ++k_;
      value_ = k_ == 0 ? 1 : 0;
      return;
    }
    value_ = value_ * std::max<long long>(top_ - k_, 0) / (k_ + 1);
    ++k_;
  }

 private:
  long long top_;
  long long k_;
  BigInt value_;
};

void check_k4_args(std::uint64_t x, std::uint64_t y) {
  if (x < 1 || y < 1) throw std::invalid_argument("G_4(x, y) needs x >= 1 and y >= 1");
}

// Items (i)-(iii) covering s = 1, 2, 3.
BigInt alpha_k4_small(long long x, long long y, long long s) {
  if (s == 1) return BigInt(y);
  if (s == 2) return 3 * (binomial(x, 2) + x * y) + binomial(y, 2) + y * (6 * x + 3 * y);
  return 3 * (binomial(3 * x + 2 * y, 3) - binomial(x + 2 * y, 3) - 2 * x * binomial(y, 2)) -
         3 * (binomial(x, 3) + binomial(x, 2) * y + x * binomial(y, 2)) + 3 * x * (x * y + binomial(x, 2)) +
         y * binomial(6 * x + 3 * y, 2) + binomial(y, 2) * (6 * x + 3 * y) + binomial(y, 3);
}

}  // namespace

BigInt alpha_closed_form_k4(std::uint64_t x, std::uint64_t y, std::uint64_t s) {
  check_k4_args(x, y);
  const auto X = static_cast<long long>(x), Y = static_cast<long long>(y), S = static_cast<long long>(s);
  const long long n = 6 * X + 4 * Y;
  if (S < 1 || S > n - 1) throw std::invalid_argument("subset size out of range for G_4(x, y)");
  if (S <= 3) return alpha_k4_small(X, Y, S);
  if (S > 3 * X + 3 * Y) return binomial(n, S);
  // Non-recovering s-sets: vertex 1 untouched, or in a tree with one edge,
  // or in a two-edge tree (3x^2 stars + 6x^2 paths) with the last vertex's copies.
  return binomial(n, S) - binomial(3 * X + 3 * Y, S) - 3 * X * binomial(X + 2 * Y, S - 1) -
         9 * X * X * binomial(Y, S - 2);
}

AlphaProfile alpha_profile_k4(std::uint64_t x, std::uint64_t y) {
  check_k4_args(x, y);
  const auto X = static_cast<long long>(x), Y = static_cast<long long>(y);
  const long long n = 6 * X + 4 * Y;
  AlphaProfile ap;
  ap.strand = 0;
  ap.n = static_cast<std::uint64_t>(n);
  ap.alpha.reserve(static_cast<std::size_t>(n - 1));

  RunningBinomial all(n, 1), untouched(3 * X + 3 * Y, 1), one_edge(X + 2 * Y, 0), two_edge(Y, -1);
  for (long long s = 1; s < n; ++s) {
    if (s <= 3)
      ap.alpha.push_back(alpha_k4_small(X, Y, s));
    else
      ap.alpha.push_back(all.value() - untouched.value() - 3 * X * one_edge.value() - 9 * X * X * two_edge.value());
    all.advance();
    untouched.advance();
    one_edge.advance();
    two_edge.advance();
  }
  ap.harmonic_n = 0;  // unused by expectation_value; exact H_n is costly at this size
  return ap;
}

double t_max_g4(std::uint64_t x, std::uint64_t y) { return expectation_value(alpha_profile_k4(x, y)); }

Rational k2_strand_expectation(const codes::TwoDimProfile& pr, std::size_t strand) {
  if (strand > 1) throw std::invalid_argument("k = 2 profile has strands 0 and 1 only");
  std::uint64_t sum = pr.x1 + pr.x2;
  for (auto a : pr.a) sum += a;
  if (sum != pr.x || pr.x == 0) throw std::invalid_argument("profile total does not match its parts");
  // Every column outside the strand's own class and outside one other class
  // completes it; a class holding all columns leaves the strand unrecoverable.
  const std::uint64_t own = strand == 0 ? pr.x1 : pr.x2;
  const std::uint64_t other = strand == 0 ? pr.x2 : pr.x1;
  if (own == 0 && (other == pr.x || std::any_of(pr.a.begin(), pr.a.end(), [&](auto a) { return a == pr.x; })))
    throw std::invalid_argument("degenerate k = 2 profile: strand cannot be recovered");
  if (own == pr.x) return 1;
  Rational e = 1 + Rational(other, pr.x - other);
  for (auto a : pr.a)
    if (a) e += Rational(a, pr.x - a);
  return e;
}

std::pair<Rational, Rational> k2_expectation(const codes::TwoDimProfile& pr) {
  if (pr.x < 2 || pr.x1 >= pr.x || pr.x2 >= pr.x ||
      std::any_of(pr.a.begin(), pr.a.end(), [&](auto a) { return a >= pr.x; }))
    throw std::invalid_argument("degenerate k = 2 profile (rank < 2)");
  return {k2_strand_expectation(pr, 0), k2_strand_expectation(pr, 1)};
}

double k2_balanced_expectation(std::uint64_t q, double x1, double a) {
  const double qm1 = static_cast<double>(q) - 1.0;
  return 1.0 + x1 / (x1 + qm1 * a) + qm1 * a / (2.0 * x1 + (qm1 - 1.0) * a);
}

double tq2_value(std::uint64_t q) {
  const double r2 = std::sqrt(2.0);
  const double qd = static_cast<double>(q);
  return 1.0 + (2.0 * qd * qd - qd * (r2 + 1.0) - 2.0 + r2) / (qd * qd * (1.0 + r2) - qd * (2.0 + r2));
}

double tq2_limit() { return 1.0 + 2.0 / (std::sqrt(2.0) + 1.0); }

double tq2_optimal_a(std::uint64_t q, double x1) {
  const double qd = static_cast<double>(q);
  return (std::sqrt(2.0) * qd - 2.0) / (qd * qd - 2.0) * x1;
}

Rational lower_bound_half(std::size_t k) { return Rational(k + 1, 2); }

Rational lower_bound_harmonic(std::uint64_t n, std::size_t k) {
  if (k == 0 || k > n) throw std::invalid_argument("lower bound needs 1 <= k <= n");
  Rational tail = 0;  // H_n - H_{n-k}
  for (std::uint64_t j = n - k + 1; j <= n; ++j) tail += Rational(1, j);
  return Rational(n) - Rational(n * (n - k), k) * tail;
}

}  // namespace racov::exact
