#include "racov/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace racov::report {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_alpha_csv(std::ostream& out, const exact::AlphaProfile& ap) {
  out << "s,alpha,binom_n_minus_1_s\n";
  BigInt c = 1;
  for (std::uint64_t s = 1; s < ap.n; ++s) {
    c = c * (ap.n - s) / s;
    out << s << ',' << ap.at(s) << ',' << c << '\n';
  }
}

void write_expectation_csv(std::ostream& out, const exact::ExpectationReport& rep) {
  out << "i,expectation,stderr,method\n";
  for (std::size_t j = 0; j < rep.strands.size(); ++j)
    out << rep.strands[j] + 1 << ',' << format_real(rep.expectation[j]) << ',' << format_real(rep.std_error[j]) << ','
        << exact::method_name(rep.method) << '\n';
}

void write_simulation_csv(std::ostream& out, const exact::ExpectationReport& rep, std::uint64_t seed) {
  out << "strand,mean,stderr,trials,seed\n";
  for (std::size_t j = 0; j < rep.strands.size(); ++j)
    out << rep.strands[j] + 1 << ',' << format_real(rep.expectation[j]) << ',' << format_real(rep.std_error[j]) << ','
        << rep.trials << ',' << seed << '\n';
}

void write_asymptotic_header(std::ostream& out) { out << "k,p,P,case_i,case_ii,total,normalized\n"; }

void write_asymptotic_row(std::ostream& out, const asym::AsymptoticBound& b) {
  out << b.k << ',' << format_real(b.p) << ',' << format_real(b.P) << ',' << format_real(b.case_i) << ','
      << format_real(b.case_ii) << ',' << format_real(b.total) << ',' << format_real(b.normalized()) << '\n';
}

void write_table(std::ostream& out, const figures::Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
}

}  // namespace racov::report
