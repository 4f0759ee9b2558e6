#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "racov/asym.hpp"
#include "racov/exact.hpp"
#include "racov/sim.hpp"

using namespace racov;
using doctest::Approx;

TEST_CASE("case i hand values") {
  CHECK(asym::case_i(4, 0.1, 0.1) == Approx(0.9).epsilon(1e-12));
  CHECK(asym::case_i(3, 1.0 / 6, 1.0 / 6) == Approx(0.5).epsilon(1e-12));
  CHECK(asym::case_i(5, 0.25, 0.0) == Approx(0.0));
  CHECK_THROWS_AS(asym::case_i(4, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("case ii hand values") {
  CHECK(asym::case_ii(4, 0.1, 0.1) == Approx(0.655159).epsilon(1e-6));
  CHECK(asym::case_ii(3, 1.0 / 6, 1.0 / 6) == Approx(11.0 / 75 + 1.0 / 6).epsilon(1e-12));
  CHECK(asym::case_ii(5, 0.0, 0.2) == 0.0);
  CHECK_THROWS_AS(asym::case_ii(5, 0.3, 0.1), std::invalid_argument);
}

TEST_CASE("total bound values") {
  auto b = asym::tk_bound(4, 0.1, 0.1);
  CHECK(b.total == Approx(3.455159).epsilon(1e-6));
  CHECK(b.normalized() == Approx(0.863789619551524).epsilon(1e-12));
  CHECK(b.total == Approx(1 + 0.9 + b.case_i + b.case_ii).epsilon(1e-12));
  CHECK(b.u_by_ell.size() == 2);
  CHECK(b.u_by_ell.back() == 0.0);
  auto c = asym::tk_bound(3, 1.0 / 6, 1.0 / 6);
  CHECK(c.total == Approx(2.646667).epsilon(1e-6));
  CHECK(c.normalized() == Approx(0.882222222222222).epsilon(1e-12));
  auto a = asym::tk_bound_alpha(4, 0.95);
  CHECK(a.p == Approx(1 / 9.8));
  CHECK(std::abs(a.normalized() - 0.86375) <= 5e-5);
  CHECK_THROWS_AS(asym::tk_bound(4, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("closed-form corollary equals the general bound at p = P") {
  for (std::size_t k = 2; k <= 500; ++k) {
    const double p = 2.0 / static_cast<double>(k * k + k);
    CAPTURE(k);
    CHECK(std::abs(asym::ubfin_bound(k) - asym::tk_bound(k, p, p).total) <= 1e-9);
  }
  CHECK(asym::ubfin_bound(3) == Approx(2.646667).epsilon(1e-6));
  CHECK(std::abs(asym::ubfin_bound(10) / 10 - 0.830316315755294) <= 1e-9);
  CHECK(std::abs(asym::ubfin_bound(200) / 200 - 0.818799048354975) <= 1e-9);
  const double r3 = asym::ubfin_bound(3) / 3, r10 = asym::ubfin_bound(10) / 10, r60 = asym::ubfin_bound(60) / 60;
  CHECK(r3 > r10);
  CHECK(r10 > r60);
  CHECK(asym::ubfin_bound(5000) / 5000 == Approx(asym::kPiSquaredOver12).epsilon(1e-2));
}

TEST_CASE("k = 3 limits") {
  CHECK(asym::k3_exact(0.0) == Approx(153.0 / 54).epsilon(1e-14));
  CHECK(asym::k3_exact(0.833968) == Approx(2.644626).epsilon(1e-6));
  CHECK(asym::k3_upper_appendix(1e-9) == Approx(3.0 - 1.0 / 6).epsilon(1e-6));
  CHECK(asym::k3_upper_appendix(0.834) <= 2.645);
  for (int i = 1; i <= 1000; ++i) {
    const double a = i * 0.01;
    CAPTURE(a);
    CHECK(asym::k3_upper_appendix(a) >= asym::k3_exact(a) - 1e-12);
  }
}

TEST_CASE("alpha optimizer") {
  auto m = asym::optimize_alpha(asym::k3_exact);
  CHECK(std::abs(m.argmin - 0.833968) <= 1e-4);
  CHECK(std::abs(m.value - 2.644626) <= 1e-5);
  auto ap = asym::optimize_alpha(asym::k3_upper_appendix);
  CHECK(ap.argmin == Approx(0.834).epsilon(2e-3));
  CHECK(ap.value <= 2.645);
  auto g = asym::optimize_alpha([](double a) { return asym::tk_bound_alpha(4, a).total; });
  CHECK(g.argmin >= 0.9);
  CHECK(g.argmin <= 1.2);
  CHECK(g.value <= asym::tk_bound_alpha(4, 0.95).total + 1e-12);
  CHECK_THROWS_AS(asym::optimize_alpha([](double) { return std::numeric_limits<double>::quiet_NaN(); }),
                  std::invalid_argument);
}

TEST_CASE("constraint-line optimizer") {
  auto four = asym::optimize_pP(4);
  CHECK(four.value <= 3.455018);
  CHECK(4 * four.P + 6 * four.p == Approx(1.0).epsilon(1e-12));
  auto three = asym::optimize_pP(3);
  CHECK(three.value <= 2.644626 + 1e-4);
  auto two = asym::optimize_pP(2);
  CHECK(two.value >= 1 + 2 / (std::sqrt(2.0) + 1) - 1e-6);
  for (std::size_t k = 3; k <= 12; ++k) {
    const double p = 2.0 / static_cast<double>(k * k + k);
    CHECK(asym::optimize_pP(k).value <= asym::tk_bound(k, p, p).total + 1e-12);
  }
}

TEST_CASE("analytic bound dominates the simulated graph model") {
  int points = 0;
  for (std::size_t k = 2; k <= 8; ++k) {
    for (double alpha : {0.3, 0.95, 3.0}) {
      if (points == 20) break;
      auto params = sim::GraphModelParams::from_alpha(k, alpha);
      auto rep = sim::mc_tau_graph(params, 50'000, 40 + points);
      auto b = asym::tk_bound(k, params.p, params.P);
      CAPTURE(k);
      CAPTURE(alpha);
      CHECK(b.total >= rep.expectation.front() - 4 * rep.std_error.front());
      ++points;
    }
  }
  CHECK(points == 20);
}
