#pragma once
// Large-x expectations of G_k(x, y) in the complete-graph model, where each
// draw is an edge of K_k (probability p each) or a vertex (P each).
#include <cstddef>
#include <functional>
#include <vector>

namespace racov::asym {

struct AsymptoticBound {
  std::size_t k = 0;
  double p = 0.0;
  double P = 0.0;
  double case_i = 0.0;
  double case_ii = 0.0;
  double total = 0.0;  // 1 + (1 - P) + case_i + case_ii
  double v = 0.0;
  std::vector<double> u_by_ell;  // u(l) for l = 2 .. k-1, stored at [l - 2]

  double normalized() const { return total / static_cast<double>(k); }
};

// Throws std::invalid_argument when (k-1)p + P <= 0.
double case_i(std::size_t k, double p, double P);
// Throws std::invalid_argument when v or some u(l) is >= 1 (divergent series).
double case_ii(std::size_t k, double p, double P);

// Throws std::invalid_argument unless kP + C(k,2)p = 1 within 1e-9.
AsymptoticBound tk_bound(std::size_t k, double p, double P);
// (p, P) from alpha = y / x: p = 1 / (C(k,2) + k alpha), P = alpha p.
AsymptoticBound tk_bound_alpha(std::size_t k, double alpha);

// Closed form at p = P = 2 / (k^2 + k), evaluated without tk_bound.
double ubfin_bound(std::size_t k);
inline constexpr double kPiSquaredOver12 = 0.82246703342411321824;

// Limits of T_max(G_3(x, alpha x)) as x grows: the appendix upper bound and the exact value.
double k3_upper_appendix(double alpha);
double k3_exact(double alpha);

struct Minimum {
  double argmin = 0.0;
  double value = 0.0;
};

// 101-point log grid on [1e-3, 10], then golden section to width 1e-6.
// Throws std::invalid_argument if the evaluator returns a non-finite value.
Minimum optimize_alpha(const std::function<double(double)>& evaluator);

struct LineMinimum {
  double p = 0.0;
  double P = 0.0;
  double value = 0.0;
};

// Minimises tk_bound(k, p, P).total along kP + C(k,2)p = 1 over P in [0, 1/k].
LineMinimum optimize_pP(std::size_t k);

}  // namespace racov::asym
