// Serial reference vs OpenMP kernels: wall time and result agreement.
// Usage: bench_kernels [repetitions]   (RA_THREADS sets the parallel worker count)
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "racov/construct.hpp"
#include "racov/exact.hpp"
#include "racov/parallel.hpp"
#include "racov/sim.hpp"

using namespace racov;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, const std::string& input, double serial, double parallel, bool same) {
  std::printf("%-14s %-34s %10.4f %10.4f %8.2fx %s\n", kernel, input.c_str(), serial, parallel, serial / parallel,
              same ? "identical" : "DIFFERENT");
}

// Dense random k x n matrix over GF(q), so the span rarely saturates early.
codes::GeneratorMatrix random_matrix(std::uint32_t q, std::size_t k, std::size_t n, std::uint64_t seed) {
  auto f = gf::Field::of_order(q);
  std::mt19937_64 rng(seed);
  std::vector<linalg::Vector> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back(codes::unit_vector(k, i));
  while (cols.size() < n) {
    linalg::Vector v(k);
    for (auto& e : v) e = static_cast<gf::Element>(rng() % q);
    if (std::any_of(v.begin(), v.end(), [](auto e) { return e != 0; })) cols.push_back(v);
  }
  return codes::GeneratorMatrix::from_expanded(f, k, cols);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("workers: %d, repetitions: %d (best time reported, seconds)\n", worker_count(), reps);
  std::printf("%-14s %-34s %10s %10s %9s %s\n", "kernel", "input", "serial", "parallel", "speedup", "results");

  for (auto [q, k, n] : {std::tuple{2u, 8ul, 22ul}, std::tuple{4u, 6ul, 20ul}}) {
    const auto g = random_matrix(q, k, n, 5);
    exact::AlphaProfile s, p;
    const double ts = best_of(reps, [&] { s = exact::reference::alpha_bruteforce(g, 0); });
    const double tp = best_of(reps, [&] { p = exact::alpha_bruteforce(g, 0); });
    row("alpha", "random GF(" + std::to_string(q) + ") k=" + std::to_string(k) + " n=" + std::to_string(n), ts, tp,
        s.alpha == p.alpha);
  }

  {
    const auto g = construct::build_g3(200, gf::Field::build(2, 11), construct::sum_free_set(2047, 600), 167);
    exact::ExpectationReport s, p;
    const std::uint64_t trials = 200'000;
    const double ts = best_of(reps, [&] { s = sim::reference::mc_tau_matrix(g, 0, trials); });
    const double tp = best_of(reps, [&] { p = sim::mc_tau_matrix(g, 0, trials); });
    row("mc_matrix", "G_3(200,167) 2e5 trials", ts, tp, s.expectation == p.expectation && s.std_error == p.std_error);
  }

  for (std::size_t k : {4ul, 16ul}) {
    const auto params = sim::GraphModelParams::from_alpha(k, 0.95);
    exact::ExpectationReport s, p;
    const std::uint64_t trials = 1'000'000;
    const double ts = best_of(reps, [&] { s = sim::reference::mc_tau_graph(params, trials); });
    const double tp = best_of(reps, [&] { p = sim::mc_tau_graph(params, trials); });
    row("mc_graph", "k=" + std::to_string(k) + " alpha=0.95 1e6 trials", ts, tp,
        s.expectation == p.expectation && s.std_error == p.std_error);
  }
  return 0;
}
