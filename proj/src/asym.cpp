#include "racov/asym.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "racov/parallel.hpp"

namespace racov::asym {

namespace {

double choose2(double n) { return n * (n - 1.0) / 2.0; }

double u_of(std::size_t k, std::size_t ell, double p, double P) {
  if (ell + 1 >= k) return 0.0;
  const double rest = static_cast<double>(k - ell - 1);
  return choose2(rest) * p + rest * P;
}

void check_probabilities(double p, double P) {
  if (!(p >= 0.0) || !(P >= 0.0)) throw std::invalid_argument("p and P must be nonnegative");
}

}  // namespace

double case_i(std::size_t k, double p, double P) {
  check_probabilities(p, P);
  const double d = static_cast<double>(k - 1) * p + P;
  if (!(d > 0.0)) throw std::invalid_argument("case i needs (k-1)p + P > 0");
  return (1.0 - d) * (1.0 - d) / d;
}

double case_ii(std::size_t k, double p, double P) {
  check_probabilities(p, P);
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const double v = k >= 2 ? choose2(static_cast<double>(k - 2)) * p + static_cast<double>(k - 2) * P : 0.0;
  if (!(v < 1.0)) throw std::invalid_argument("case ii diverges: v >= 1");
  double total = static_cast<double>(k - 1) * p * v * (2.0 - v) / ((1.0 - v) * (1.0 - v));
  for (std::size_t ell = 2; ell + 1 <= k; ++ell) {
    const double u = u_of(k, ell, p, P);
    if (!(u < 1.0)) throw std::invalid_argument("case ii diverges: u >= 1");
    // C(k-1,l) l! (l+1)^(l-1) p^l / (1-u)^(l+1) as a product of l factors.
    const double w = static_cast<double>(ell + 1) * p / (1.0 - u);
    double term = 1.0 / (static_cast<double>(ell + 1) * (1.0 - u));
    for (std::size_t j = 0; j < ell; ++j) term *= static_cast<double>(k - 1 - j) * w;
    total += term;
  }
  return total;
}

AsymptoticBound tk_bound(std::size_t k, double p, double P) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const double kd = static_cast<double>(k);
  const double mass = kd * P + choose2(kd) * p;
  if (std::abs(mass - 1.0) > 1e-9)
    throw std::invalid_argument("need kP + C(k,2)p = 1, got " + std::to_string(mass));
  AsymptoticBound b;
  b.k = k;
  b.p = p;
  b.P = P;
  b.case_i = case_i(k, p, P);
  b.case_ii = case_ii(k, p, P);
  b.total = 1.0 + (1.0 - P) + b.case_i + b.case_ii;
  b.v = choose2(static_cast<double>(k - 2)) * p + static_cast<double>(k - 2) * P;
  for (std::size_t ell = 2; ell + 1 <= k; ++ell) b.u_by_ell.push_back(u_of(k, ell, p, P));
  return b;
}

AsymptoticBound tk_bound_alpha(std::size_t k, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  const double kd = static_cast<double>(k);
  const double p = 1.0 / (choose2(kd) + kd * alpha);
  return tk_bound(k, p, alpha * p);
}

double ubfin_bound(std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const double kd = static_cast<double>(k);
  const double p = 2.0 / (kd * kd + kd);
  double t = 2.0 - p + (kd - 1.0) * (kd - 1.0) / (2.0 * (kd + 1.0));
  t += (kd - 1.0) * p * ((kd * kd - 3.0 * kd + 2.0) / (4.0 * kd - 2.0)) * ((kd * kd + 5.0 * kd - 2.0) / (4.0 * kd - 2.0));
  for (std::size_t ell = 2; ell + 1 <= k; ++ell) {
    // C(k-1,l) l! 2^l k(k+1) / ((l+1)^2 (2k-l)^(l+1))
    const double l = static_cast<double>(ell);
    // Summed in logs since the partial products overflow for large k.
    double log_term = std::log(kd * (kd + 1.0) / ((l + 1.0) * (l + 1.0) * (2.0 * kd - l)));
    for (std::size_t j = 0; j < ell; ++j) log_term += std::log(2.0 * static_cast<double>(k - 1 - j) / (2.0 * kd - l));
    t += std::exp(log_term);
  }
  return t;
}

double k3_upper_appendix(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("alpha must be positive");
  const double s = (1.0 + a) * (1.0 + a);
  return 3.0 - a / (3.0 + 3.0 * a) - (2.0 + 10.0 * a + 5.0 * a * a) / (9.0 * s) +
         std::pow(1.0 + 2.0 * a, 3) / (9.0 * s * (2.0 + a)) +
         2.0 * a * a * (9.0 + 7.0 * a) / (9.0 * s * (3.0 + 2.0 * a) * (3.0 + 2.0 * a));
}

double k3_exact(double a) {
  if (!(a >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  const double num = 153.0 + a * (543.0 + a * (805.0 + a * (611.0 + a * (234.0 + a * 36.0))));
  const double den = 3.0 * (1.0 + a) * (1.0 + a) * (2.0 + a) * (3.0 + 2.0 * a) * (3.0 + 2.0 * a);
  return num / den;
}

namespace {

template <typename F>
Minimum grid_then_golden(const F& f, const std::vector<double>& grid, double tol) {
  std::vector<double> values(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for num_threads(worker_count())
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]);
    } catch (...) {
      values[static_cast<std::size_t>(i)] = std::nan("");
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(values[i])) throw std::invalid_argument("objective returned a non-finite value");
    if (values[i] < values[best]) best = i;  // ties keep the smaller parameter
  }
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[best + 1 == grid.size() ? best : best + 1];
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
  double fa = f(a), fb = f(b);
  while (hi - lo > tol) {
    if (!std::isfinite(fa) || !std::isfinite(fb)) throw std::invalid_argument("objective returned a non-finite value");
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = f(b);
    }
  }
  Minimum m{grid[best], values[best]};
  const double mid = (lo + hi) / 2.0;
  const double fm = f(mid);
  if (std::isfinite(fm) && fm <= m.value) m = {mid, fm};
  return m;
}

}  // namespace

Minimum optimize_alpha(const std::function<double(double)>& evaluator) {
  std::vector<double> grid(101);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = std::pow(10.0, -3.0 + 4.0 * static_cast<double>(i) / 100.0);
  return grid_then_golden(evaluator, grid, 1e-6);
}

LineMinimum optimize_pP(std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const double kd = static_cast<double>(k);
  const double edges = choose2(kd);
  auto p_of = [&](double P) { return std::max(0.0, (1.0 - kd * P) / edges); };
  auto objective = [&](double P) { return tk_bound(k, p_of(P), P).total; };
  std::vector<double> grid(201);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i) / 200.0 / kd;
  const Minimum m = grid_then_golden(objective, grid, 1e-8);
  return {p_of(m.argmin), m.argmin, m.value};
}

}  // namespace racov::asym
