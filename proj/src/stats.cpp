#include "osfib/stats.hpp"

namespace osfib {

std::vector<SummaryRow> summarize(const std::vector<std::vector<double>>& per_run_values,
                                  const std::vector<long>& checkpoints) {
    if (per_run_values.empty()) throw Error("summarize: no runs");
    for (const auto& run : per_run_values) {
        if (run.size() != checkpoints.size()) {
            throw Error("summarize: run length does not match the checkpoints");
        }
    }
    std::vector<SummaryRow> rows;
    rows.reserve(checkpoints.size());
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        MeanVar acc;
        for (const auto& run : per_run_values) acc.add(run[c]);
        const double half_width = kZ99 * acc.std_err();
        rows.push_back(SummaryRow{checkpoints[c], acc.mean(), acc.mean() - half_width,
                                  acc.mean() + half_width, static_cast<int>(acc.count())});
    }
    return rows;
}

} // namespace osfib
