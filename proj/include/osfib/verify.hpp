#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "osfib/runner.hpp"

// Check suites behind the `verify` and `lower-bound` subcommands. Every check
// reduces to one row of (name, params, lhs, rhs, pass) where pass means
// lhs <= rhs for bound checks and lhs >= rhs for lower-tail checks; the
// comparison direction is baked into `pass` so consumers only read that flag.

namespace osfib {

struct CheckRow {
    std::string check;
    std::string params;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows);
bool all_pass(const std::vector<CheckRow>& rows);

// Empirical regret vs the closed-form bounds on one uniform-gap experiment:
// the known-horizon bound against the mean, the gap-dependent bound against
// mean plus CI half-width, the corollary likewise, and the doubling bound
// against the restarting variant's mean.
std::vector<CheckRow> verify_bounds(const ExperimentConfig& base_cfg);

// The exact oracle against its closed form: the two pinned instances, random
// dominance, permutation dominance, and the Eq-consistency of the
// gap-dependent bound with the closed form plus 2.
std::vector<CheckRow> verify_lp(int instances, std::uint64_t seed);

// Event-frequency checks on instrumented elimination runs: all-rounds-nice
// frequency vs 2/T, end-round sampling failures vs 2/T^2 + 3 SE, and the
// procedure-implies-sampling implication on every run.
std::vector<CheckRow> verify_monitor(int k, double delta, int best, long horizon, int runs,
                                     std::uint64_t seed);

// Exact reverse-Chernoff grid: n in {25,50,...,n_max}, delta in {0.15,...,0.5},
// asserted wherever delta <= 1/2 and delta^2 n > 6.
std::vector<CheckRow> verify_chernoff(int n_max);

// Exact Stirling-corollary sweep over all 1 <= l <= n-1 for n <= n_max.
// The CSV keeps one row per n (the minimum slack) to stay readable.
std::vector<CheckRow> verify_stirling(int n_max);

} // namespace osfib
