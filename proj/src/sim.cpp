#include "racov/sim.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

#include "racov/errors.hpp"
#include "racov/linalg.hpp"
#include "racov/parallel.hpp"
#include "racov/rng.hpp"

namespace racov::sim {

void GraphModelParams::validate() const {
  if (k < 2) throw std::invalid_argument("graph model needs k >= 2");
  if (!(p >= 0.0) || !(P >= 0.0)) throw std::invalid_argument("graph model probabilities must be nonnegative");
  const double kd = static_cast<double>(k);
  const double total = kd * P + kd * (kd - 1.0) / 2.0 * p;
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("graph model needs kP + C(k,2)p = 1, got " + std::to_string(total));
}

GraphModelParams GraphModelParams::from_xy(std::size_t k, double x, double y) {
  const double kd = static_cast<double>(k);
  const double denom = kd * y + kd * (kd - 1.0) / 2.0 * x;
  if (!(denom > 0.0)) throw std::invalid_argument("graph model needs x, y >= 0, not both zero");
  GraphModelParams out{k, x / denom, y / denom};
  out.validate();
  return out;
}

GraphModelParams GraphModelParams::from_alpha(std::size_t k, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  return from_xy(k, 1.0, alpha);
}

GraphState::GraphState(std::size_t k)
    : parent_(k), vertex_count_(k, 1), edge_draws_(k, 0), has_vertex_(k, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t GraphState::find(std::size_t v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void GraphState::add_vertex(std::size_t v) {
  ++rounds_;
  has_vertex_[find(v)] = 1;
}

void GraphState::add_edge(std::size_t a, std::size_t b) {
  ++rounds_;
  std::size_t ra = find(a), rb = find(b);
  if (ra == rb) {
    ++edge_draws_[ra];
    return;
  }
  if (vertex_count_[ra] < vertex_count_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  vertex_count_[ra] += vertex_count_[rb];
  edge_draws_[ra] += edge_draws_[rb] + 1;
  has_vertex_[ra] = has_vertex_[ra] || has_vertex_[rb];
}

bool GraphState::recoverable(std::size_t v) const {
  const std::size_t r = find(v);
  return has_vertex_[r] || edge_draws_[r] >= vertex_count_[r];
}

namespace {

struct Moments {
  uint128 sum = 0;
  uint128 sum_sq = 0;
  void add(std::uint64_t t) {
    sum += t;
    sum_sq += static_cast<uint128>(t) * t;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
};

exact::ExpectationReport summarize(const Moments& m, std::uint64_t trials, std::size_t strand) {
  const long double n = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(m.sum) / n;
  long double var = 0.0L;
  if (trials > 1) {
    // Exact integer numerator of n * sum_sq - sum^2 before dividing.
    const long double s = static_cast<long double>(m.sum);
    var = (static_cast<long double>(m.sum_sq) - s * s / n) / (n - 1.0L);
    var = std::max(var, 0.0L);
  }
  exact::ExpectationReport rep;
  rep.method = exact::Method::monte_carlo;
  rep.strands = {strand};
  rep.expectation = {static_cast<double>(mean)};
  rep.std_error = {static_cast<double>(std::sqrt(var / n))};
  rep.t_max = rep.expectation.front();
  rep.trials = trials;
  return rep;
}

template <typename Trial>
exact::ExpectationReport run_parallel(std::uint64_t trials, std::uint64_t seed, std::size_t strand,
                                      const Trial& trial) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Moments total;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel num_threads(worker_count())
  {
    Moments local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      try {
        auto rng = trial_stream(seed, static_cast<std::uint64_t>(t));
        local.add(trial(rng));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical
    total.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(total, trials, strand);
}

template <typename Trial>
exact::ExpectationReport run_serial(std::uint64_t trials, std::uint64_t seed, std::size_t strand,
                                    const Trial& trial) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Moments total;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = trial_stream(seed, t);
    total.add(trial(rng));
  }
  return summarize(total, trials, strand);
}

class MatrixTrial {
 public:
  MatrixTrial(const codes::GeneratorMatrix& g, std::size_t strand)
      : field_(g.field()), k_(g.k()), n_(g.n()), strand_(strand), cap_(kRoundCapPerStrand * g.k()) {
    if (strand >= g.k()) throw std::invalid_argument("strand index out of range");
    std::uint64_t acc = 0;
    for (const auto& c : g.columns()) {
      vectors_.push_back(c.vector);
      acc += c.multiplicity;
      cumulative_.push_back(acc);
    }
  }

  std::uint64_t operator()(SplitMix64& rng) const {
    linalg::SpanTracker span(field_, k_);
    for (std::uint64_t r = 1; r <= cap_; ++r) {
      const std::uint64_t u = rng.below(n_);
      const auto idx = static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                                                cumulative_.begin());
      span.insert(vectors_[idx]);
      if (span.contains_unit(strand_)) return r;
    }
    throw GuardError("Monte Carlo trial exceeded " + std::to_string(cap_) + " draws");
  }

 private:
  gf::Field field_;
  std::size_t k_;
  std::uint64_t n_;
  std::size_t strand_;
  std::uint64_t cap_;
  std::vector<linalg::Vector> vectors_;
  std::vector<std::uint64_t> cumulative_;
};

class GraphTrial {
 public:
  explicit GraphTrial(const GraphModelParams& params) : k_(params.k), cap_(kRoundCapPerStrand * params.k) {
    params.validate();
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = a + 1; b < k_; ++b) edges_.push_back({a, b});
    const double edge_mass = static_cast<double>(edges_.size()) * params.p;
    edge_mass_ = edge_mass;
    p_ = params.p;
    P_ = params.P;
  }

  std::uint64_t operator()(SplitMix64& rng) const {
    GraphState state(k_);
    while (state.rounds() < cap_) {
      const double u = rng.uniform();
      if (u < edge_mass_ && p_ > 0.0) {
        const auto e = std::min(static_cast<std::size_t>(u / p_), edges_.size() - 1);
        state.add_edge(edges_[e].first, edges_[e].second);
      } else if (P_ > 0.0) {
        const auto v = std::min(static_cast<std::size_t>((u - edge_mass_) / P_), k_ - 1);
        state.add_vertex(v);
      } else {
        const auto e = edges_.size() - 1;
        state.add_edge(edges_[e].first, edges_[e].second);
      }
      if (state.recoverable(0)) return state.rounds();
    }
    throw GuardError("graph-model trial exceeded " + std::to_string(cap_) + " draws");
  }

 private:
  std::size_t k_;
  std::uint64_t cap_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  double edge_mass_ = 0.0;
  double p_ = 0.0;
  double P_ = 0.0;
};

}  // namespace

exact::ExpectationReport mc_tau_matrix(const codes::GeneratorMatrix& g, std::size_t strand, std::uint64_t trials,
                                       std::uint64_t seed) {
  return run_parallel(trials, seed, strand, MatrixTrial(g, strand));
}

exact::ExpectationReport mc_tau_graph(const GraphModelParams& params, std::uint64_t trials, std::uint64_t seed) {
  return run_parallel(trials, seed, 0, GraphTrial(params));
}

namespace reference {

exact::ExpectationReport mc_tau_matrix(const codes::GeneratorMatrix& g, std::size_t strand, std::uint64_t trials,
                                       std::uint64_t seed) {
  return run_serial(trials, seed, strand, MatrixTrial(g, strand));
}

exact::ExpectationReport mc_tau_graph(const GraphModelParams& params, std::uint64_t trials, std::uint64_t seed) {
  return run_serial(trials, seed, 0, GraphTrial(params));
}

}  // namespace reference

}  // namespace racov::sim
