#pragma once
// Monte Carlo estimates of E[tau_i], both for explicit matrices and for the
// complete-graph collection model.
#include <cstddef>
#include <cstdint>
#include <vector>

#include "racov/codes.hpp"
#include "racov/exact.hpp"

namespace racov::sim {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr std::uint64_t kRoundCapPerStrand = 10'000;  // trial cap is this times k

struct GraphModelParams {
  std::size_t k = 0;
  double p = 0.0;  // per edge of K_k
  double P = 0.0;  // per vertex

  // Throws std::invalid_argument unless k >= 2, p, P >= 0 and kP + C(k,2)p = 1 within 1e-12.
  void validate() const;

  // p = x / (ky + C(k,2)x), P = y / (ky + C(k,2)x).
  static GraphModelParams from_xy(std::size_t k, double x, double y);
  // Same with alpha = y / x.
  static GraphModelParams from_alpha(std::size_t k, double alpha);
};

// Union-find over the k vertices with per-component draw counters. A
// component of c vertices has a cycle (a drawn vertex counting as a 1-cycle,
// a repeated edge as a 2-cycle) exactly when it holds a drawn vertex or at
// least c edge draws.
class GraphState {
 public:
  explicit GraphState(std::size_t k);

  void add_vertex(std::size_t v);
  void add_edge(std::size_t a, std::size_t b);

  bool recoverable(std::size_t v) const;
  std::size_t k() const { return parent_.size(); }
  std::uint64_t rounds() const { return rounds_; }

 private:
  std::size_t find(std::size_t v) const;

  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> vertex_count_;
  std::vector<std::uint64_t> edge_draws_;
  std::vector<char> has_vertex_;
  std::uint64_t rounds_ = 0;
};

inline bool graph_recoverable(const GraphState& state, std::size_t v) { return state.recoverable(v); }

// Draws columns with probability multiplicity / n until e_strand is spanned.
// Trials run in parallel; the result does not depend on the worker count.
exact::ExpectationReport mc_tau_matrix(const codes::GeneratorMatrix& g, std::size_t strand, std::uint64_t trials,
                                       std::uint64_t seed = kDefaultSeed);

// Draws edges (probability p each) and vertices (P each) until vertex 0 is recoverable.
exact::ExpectationReport mc_tau_graph(const GraphModelParams& params, std::uint64_t trials,
                                      std::uint64_t seed = kDefaultSeed);

namespace reference {
exact::ExpectationReport mc_tau_matrix(const codes::GeneratorMatrix& g, std::size_t strand, std::uint64_t trials,
                                       std::uint64_t seed = kDefaultSeed);
exact::ExpectationReport mc_tau_graph(const GraphModelParams& params, std::uint64_t trials,
                                      std::uint64_t seed = kDefaultSeed);
}  // namespace reference

}  // namespace racov::sim
