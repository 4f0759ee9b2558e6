#pragma once
// Exact random-access expectations.
//
// For a rank-k matrix with n columns, let alpha_i^s count the s-subsets of
// columns whose span contains e_i. Then
//   E[tau_i] = n H_n - sum_{s=1}^{n-1} alpha_i^s / C(n-1, s).
// Strand indices are 0-based throughout the library.
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "racov/bignum.hpp"
#include "racov/codes.hpp"

namespace racov::exact {

enum class Method { bruteforce, closed_form_k2, closed_form_k4, monte_carlo, asymptotic_bound };
std::string_view method_name(Method m);

struct AlphaProfile {
  std::size_t strand = 0;
  std::uint64_t n = 0;
  std::vector<BigInt> alpha;  // alpha[s - 1] for s = 1 .. n-1
  Rational harmonic_n;

  const BigInt& at(std::uint64_t s) const { return alpha.at(s - 1); }
  double harmonic_value() const { return to_double(harmonic_n); }
};

struct ExpectationReport {
  std::vector<std::size_t> strands;
  std::vector<double> expectation;
  std::vector<double> std_error;  // zero unless Monte Carlo
  double t_max = 0.0;
  Method method = Method::bruteforce;
  std::uint64_t trials = 0;
};

inline constexpr std::uint64_t kMaxBruteforceColumns = 24;

// Counts over all 2^n - 1 nonempty column subsets, pruning whole subtrees
// once e_i is spanned. Subtrees are distributed over OpenMP workers; the
// counts do not depend on the partition. Throws GuardError for n > 24.
AlphaProfile alpha_bruteforce(const codes::GeneratorMatrix& g, std::size_t strand);

namespace reference {
// Single-threaded depth-first enumeration from the root.
AlphaProfile alpha_bruteforce(const codes::GeneratorMatrix& g, std::size_t strand);
}  // namespace reference

Rational expectation_from_alpha(const AlphaProfile& ap);

// Same quantity through 256-bit fixed-point quotients, for profiles whose
// exact rational sum would have an impractically large denominator.
double expectation_value(const AlphaProfile& ap);

// All strands of g by brute force, exactly.
std::vector<Rational> bruteforce_expectations(const codes::GeneratorMatrix& g);
ExpectationReport bruteforce_report(const codes::GeneratorMatrix& g);

// alpha_i^s(G_4(x, y)), identical for every strand. Valid for x, y >= 1 and
// 1 <= s <= 6x + 4y - 1; throws std::invalid_argument otherwise.
BigInt alpha_closed_form_k4(std::uint64_t x, std::uint64_t y, std::uint64_t s);
AlphaProfile alpha_profile_k4(std::uint64_t x, std::uint64_t y);
double t_max_g4(std::uint64_t x, std::uint64_t y);

// (E[tau_1], E[tau_2]) from the class counts of a k = 2 matrix.
// Throws std::invalid_argument for a rank-deficient profile.
std::pair<Rational, Rational> k2_expectation(const codes::TwoDimProfile& profile);
// One strand (0 or 1) only; rejects the profile only if that strand can never be recovered.
Rational k2_strand_expectation(const codes::TwoDimProfile& profile, std::size_t strand);

// E[tau_1] for x_1 = x_2 = x1 and every a_i = a (a may be fractional).
double k2_balanced_expectation(std::uint64_t q, double x1, double a);

// T_q(2) and its q -> infinity limit 1 + 2 / (sqrt(2) + 1).
double tq2_value(std::uint64_t q);
double tq2_limit();
// Real minimiser a* of k2_balanced_expectation for given q and x1.
double tq2_optimal_a(std::uint64_t q, double x1);

// Lower bounds valid for every rank-k matrix with n columns.
Rational lower_bound_half(std::size_t k);                       // (k + 1) / 2
Rational lower_bound_harmonic(std::uint64_t n, std::size_t k);  // n - n(n-k)/k (H_n - H_{n-k})

}  // namespace racov::exact
