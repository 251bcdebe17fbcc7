#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "osfib/stats.hpp"

// CSV emission with round-trip-exact numbers: every double is printed with
// 17 significant digits, so parse-then-reprint reproduces the bytes.

namespace osfib {

std::string format_double(double value);

// header: t,mean,ci_low,ci_high,runs
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

struct PlotRow {
    std::string algo;
    long t = 0;
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// header: algo,t,mean,ci_low,ci_high; rows ordered by (algo, t)
void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows);
std::vector<PlotRow> read_plot_csv(std::istream& in);

} // namespace osfib
