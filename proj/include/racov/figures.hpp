#pragma once
// Regeneration of the three plotted data sets on their plotted grids.
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace racov::figures {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// The prime powers plotted for T_q(2).
const std::vector<std::uint64_t>& tq2_orders();

struct K4Point {
  std::uint64_t x;
  std::uint64_t y;
};
// (x, y) pairs plotted for G_4(x, y), x in {5, 10, 100, 1000}.
std::vector<K4Point> k4_points();

Table fig_tq2();    // q, T_q(2) / 2
Table fig_k4();     // x, alpha, T_max(G_4(x, alpha x)) / 4
Table fig_ubfin();  // k, corollary bound / k for k = 3 .. 200

inline constexpr std::string_view kFigureNames[] = {"fig_tq2", "fig_k4", "fig_ubfin"};
// Throws std::invalid_argument for an unknown name.
Table sweep(std::string_view name);

}  // namespace racov::figures
