#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "osfib/csv.hpp"
#include "osfib/simulate.hpp"
#include "osfib/stats.hpp"

// Experiment orchestration: seeded replication (optionally across threads,
// with per-run streams keeping the output identical either way), checkpointed
// traces, 99% confidence summaries, and CSV/JSON artifacts.

namespace osfib {

struct ExperimentConfig {
    std::string algo = "elim";          // elim, elim-doubling, ucbn, ucb1, exp3rtb
    std::string instance = "uniform-gap"; // uniform-gap, random-mean, auction
    int k = 20;
    long horizon = 100000;
    int runs = 100;
    double delta = 0.1;  // uniform-gap
    double base = 0.6;   // uniform-gap
    double lambda = 0.1; // random-mean
    double lo = 0.2;     // random-mean
    double hi = 0.6;     // random-mean
    int best = 17;
    int bidders = 5;     // auction
    std::uint64_t seed = 1;
    std::vector<long> checkpoints; // empty: default grid
    int threads = 1;
    std::string out_dir;
    PolicyOptions policy_options;
};

InstanceSpec make_instance(const ExperimentConfig& cfg);

struct ExperimentResult {
    std::vector<long> checkpoints;
    std::vector<std::vector<double>> cum;  // [run][checkpoint]
    std::vector<std::vector<int>> arms;    // [run][checkpoint]
    std::vector<SummaryRow> summary;

    double final_mean() const { return summary.back().mean; }
    double final_ci_low() const { return summary.back().ci_low; }
    double final_ci_high() const { return summary.back().ci_high; }
};

ExperimentResult run_experiment_in_memory(const ExperimentConfig& cfg);

// Writes traces.csv (run,t,arm,cum_regret), summary.csv, and metadata.json
// into cfg.out_dir.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_trace_csv(std::ostream& out, const ExperimentResult& result);

// Merges per-algorithm summary files into one long-format table; the files
// must share their checkpoint grid.
std::vector<PlotRow> merge_summaries(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<SummaryRow>>& summaries);

} // namespace osfib
