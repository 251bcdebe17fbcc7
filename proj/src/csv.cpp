#include "osfib/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "osfib/errors.hpp"

namespace osfib {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

void expect_header(std::istream& in, const std::string& expected, const char* what) {
    std::string line;
    if (!std::getline(in, line) || line != expected) {
        throw Error(std::string("bad ") + what + " header: expected '" + expected + "'");
    }
}

} // namespace

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "t,mean,ci_low,ci_high,runs\n";
    for (const SummaryRow& row : rows) {
        out << row.t << ',' << format_double(row.mean) << ',' << format_double(row.ci_low) << ','
            << format_double(row.ci_high) << ',' << row.runs << '\n';
    }
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
    expect_header(in, "t,mean,ci_low,ci_high,runs", "summary");
    std::vector<SummaryRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != 5) throw Error("bad summary row: " + line);
        rows.push_back(SummaryRow{std::stol(fields[0]), std::stod(fields[1]),
                                  std::stod(fields[2]), std::stod(fields[3]),
                                  std::stoi(fields[4])});
    }
    return rows;
}

void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows) {
    out << "algo,t,mean,ci_low,ci_high\n";
    for (const PlotRow& row : rows) {
        out << row.algo << ',' << row.t << ',' << format_double(row.mean) << ','
            << format_double(row.ci_low) << ',' << format_double(row.ci_high) << '\n';
    }
}

std::vector<PlotRow> read_plot_csv(std::istream& in) {
    expect_header(in, "algo,t,mean,ci_low,ci_high", "plot-data");
    std::vector<PlotRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != 5) throw Error("bad plot-data row: " + line);
        rows.push_back(PlotRow{fields[0], std::stol(fields[1]), std::stod(fields[2]),
                               std::stod(fields[3]), std::stod(fields[4])});
    }
    return rows;
}

} // namespace osfib
