#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "racov/figures.hpp"
#include "racov/report.hpp"

using namespace racov;

namespace {

void compare_with_golden(const figures::Table& table, const std::string& file, double tol) {
  const auto golden = testing::read_csv(testing::data_path(file));
  REQUIRE(golden.size() == table.rows.size() + 1);
  REQUIRE(golden[0] == table.header);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& want = golden[r + 1];
    const auto& got = table.rows[r];
    REQUIRE(want.size() == got.size());
    for (std::size_t c = 0; c + 1 < got.size(); ++c) CHECK(std::stod(want[c]) == doctest::Approx(got[c]).epsilon(1e-12));
    CAPTURE(r);
    CAPTURE(want[0]);
    CHECK(std::abs(std::stod(want.back()) - got.back()) <= tol);
  }
}

const figures::Table& k4_table() {
  static const auto t = figures::fig_k4();
  return t;
}

}  // namespace

TEST_CASE("T_q(2) curve") {
  const auto t = figures::fig_tq2();
  CHECK(t.rows.size() == 50);
  compare_with_golden(t, "fig_tq2.csv", 1e-12);
  CHECK(t.rows.front()[1] == doctest::Approx(0.957106781186547).epsilon(1e-14));
}

TEST_CASE("G_4 curve from closed-form profiles") {
  const auto& t = k4_table();
  compare_with_golden(t, "fig_k4.csv", 1e-9);
  bool found = false;
  for (const auto& row : t.rows)
    if (row[0] == 1000 && std::abs(row[1] - 0.95) < 1e-12) {
      found = true;
      CHECK(std::abs(row[2] - 0.863813858004242) <= 1e-9);
    }
  CHECK(found);
}

TEST_CASE("corollary curve") {
  const auto t = figures::fig_ubfin();
  CHECK(t.rows.size() == 198);
  CHECK(t.rows.front()[0] == 3);
  CHECK(t.rows.back()[0] == 200);
  compare_with_golden(t, "fig_ubfin.csv", 1e-9);
  CHECK(std::abs(t.rows[97][1] - 0.817901988459934) <= 1e-9);
}

TEST_CASE("sweep output is deterministic and named") {
  for (auto name : figures::kFigureNames) {
    if (name == "fig_k4") continue;
    std::ostringstream a, b;
    report::write_table(a, figures::sweep(name));
    report::write_table(b, figures::sweep(name));
    CHECK(a.str() == b.str());
  }
  std::ostringstream a, b;
  report::write_table(a, k4_table());
  report::write_table(b, figures::fig_k4());
  CHECK(a.str() == b.str());
  CHECK_THROWS_AS(figures::sweep("fig_nope"), std::invalid_argument);
}
