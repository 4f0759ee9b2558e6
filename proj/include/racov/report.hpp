#pragma once
// CSV emission. Reals use 15 significant digits and '.' regardless of locale;
// strand indices are written 1-based.
#include <cstdint>
#include <ostream>
#include <string>

#include "racov/asym.hpp"
#include "racov/exact.hpp"
#include "racov/figures.hpp"

namespace racov::report {

std::string format_real(double v);

void write_alpha_csv(std::ostream& out, const exact::AlphaProfile& ap);
void write_expectation_csv(std::ostream& out, const exact::ExpectationReport& rep);
void write_simulation_csv(std::ostream& out, const exact::ExpectationReport& rep, std::uint64_t seed);

void write_asymptotic_header(std::ostream& out);
void write_asymptotic_row(std::ostream& out, const asym::AsymptoticBound& b);

void write_table(std::ostream& out, const figures::Table& table);

}  // namespace racov::report
