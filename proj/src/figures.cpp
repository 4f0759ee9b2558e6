#include "racov/figures.hpp"

#include <omp.h>

#include <stdexcept>

#include "racov/asym.hpp"
#include "racov/exact.hpp"
#include "racov/parallel.hpp"

namespace racov::figures {

const std::vector<std::uint64_t>& tq2_orders() {
  static const std::vector<std::uint64_t> orders = {
      2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17,  19,  23,  25,  27,  29,  31,  32,  37,  41,  43,  47,  49,  53,  59,
      61, 64, 67, 71, 73, 79, 81, 83, 89, 97, 101, 103, 107, 109, 113, 121, 125, 127, 128, 131, 137, 139, 149, 151, 157};
  return orders;
}

std::vector<K4Point> k4_points() {
  std::vector<K4Point> pts;
  for (std::uint64_t y = 1; y <= 10; ++y) pts.push_back({5, y});
  for (std::uint64_t y = 1; y <= 20; ++y) pts.push_back({10, y});
  // The x = 100 curve skips a few ratios.
  for (std::uint64_t y : {10, 20, 25, 35, 40, 45, 50, 55, 65, 70, 75, 80, 85, 90, 95, 100, 110,
                          115, 125, 130, 135, 140, 145, 150, 155, 160, 165, 170, 175, 180, 185, 190, 195, 200})
    pts.push_back({100, y});
  for (std::uint64_t y = 100; y <= 2000; y += 50) pts.push_back({1000, y});
  return pts;
}

Table fig_tq2() {
  Table t{{"q", "normalized"}, {}};
  for (auto q : tq2_orders()) t.rows.push_back({static_cast<double>(q), exact::tq2_value(q) / 2.0});
  return t;
}

Table fig_k4() {
  const auto pts = k4_points();
  Table t{{"x", "alpha", "normalized"}, std::vector<std::vector<double>>(pts.size())};
  const auto count = static_cast<std::int64_t>(pts.size());
  // Rows are independent; the largest come last, so dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& pt = pts[static_cast<std::size_t>(i)];
    const double x = static_cast<double>(pt.x);
    t.rows[static_cast<std::size_t>(i)] = {x, static_cast<double>(pt.y) / x, exact::t_max_g4(pt.x, pt.y) / 4.0};
  }
  return t;
}

Table fig_ubfin() {
  Table t{{"k", "normalized"}, {}};
  for (std::size_t k = 3; k <= 200; ++k)
    t.rows.push_back({static_cast<double>(k), asym::ubfin_bound(k) / static_cast<double>(k)});
  return t;
}

Table sweep(std::string_view name) {
  if (name == "fig_tq2") return fig_tq2();
  if (name == "fig_k4") return fig_k4();
  if (name == "fig_ubfin") return fig_ubfin();
  throw std::invalid_argument("unknown figure '" + std::string(name) + "'");
}

}  // namespace racov::figures
