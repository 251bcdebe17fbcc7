#pragma once

#include <cmath>
#include <vector>

#include "osfib/errors.hpp"

// Replication summaries. Confidence intervals use the normal approximation
// mean +/- 2.576 * sample std / sqrt(runs); a single run gets a zero-width
// interval.

namespace osfib {

inline constexpr double kZ99 = 2.576;

// Welford accumulator.
class MeanVar {
public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }
    long count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1); }
    double stddev() const { return std::sqrt(variance()); }
    double std_err() const { return n_ < 1 ? 0.0 : stddev() / std::sqrt(static_cast<double>(n_)); }

private:
    long n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct SummaryRow {
    long t = 0;
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    int runs = 0;
};

// per_run_values[r][c] = cumulative value of run r at checkpoints[c].
std::vector<SummaryRow> summarize(const std::vector<std::vector<double>>& per_run_values,
                                  const std::vector<long>& checkpoints);

} // namespace osfib
