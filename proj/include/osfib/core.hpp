#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osfib/errors.hpp"

// Core domain types for the one-sided full-information bandit.
//
// Conventions used throughout the library:
//   - Arms are 1-indexed at every interface; vectors store arm i at [i-1].
//   - Playing arm i reveals the rewards of all arms j >= i in that round.
//   - All rewards and means lie in [0,1].
//   - The best arm is the smallest index attaining the maximum mean.

namespace osfib {

enum class Family {
    bernoulli,
    auction,
    custom_correlated, // realized by the auction environment (shared bids)
};

struct AuctionSpec {
    std::vector<double> reserves; // strictly increasing, in [0,1]
    int bidders = 1;
    // Bidder valuations; only iid uniform on [0,1] is implemented.
    enum class ValueDist { uniform01 } value_dist = ValueDist::uniform01;
};

struct InstanceSpec {
    int k = 0;
    std::vector<double> means;
    Family family = Family::bernoulli;
    int best = 1; // derived: smallest index of the maximum mean
    std::string label;
    std::optional<AuctionSpec> auction; // set for auction/custom_correlated
};

struct GapProfile {
    // gaps[i-1] = mean(best) - mean(i), >= 0, zero at the best arm
    std::vector<double> gaps;
    // descending sort of { gaps[i-1] : i <= best }; last entry is 0
    std::vector<double> sorted_prefix;
};

// The feedback of one round: rewards of arms first..K.
struct ObservationSlice {
    int first = 1;
    std::vector<double> values;

    int last_arm(int k) const { return k; }
    bool covers(int arm) const { return arm >= first; }
    double value_for(int arm) const { return values[static_cast<std::size_t>(arm - first)]; }
};

struct RegretRow {
    long t = 0;
    int arm = 0;
    double increment = 0.0;
    double cumulative = 0.0;
};

struct RegretTrace {
    int run_id = 0;
    std::vector<RegretRow> rows;

    double total() const { return rows.empty() ? 0.0 : rows.back().cumulative; }
};

// Smallest index attaining the maximum mean. Throws InvalidInstanceError on
// an empty vector or entries outside [0,1].
int best_arm(const std::vector<double>& means);

// Validates fields and derives `best`; the factory behind all instance makers.
InstanceSpec make_custom_instance(std::vector<double> means, Family family = Family::bernoulli,
                                  std::string label = {});

GapProfile gap_profile(const InstanceSpec& inst);

// Rewards of arms played..K, in index order.
ObservationSlice observation_slice(int k, int played, const std::vector<double>& rewards);

// Appends one row; the increment is the true-mean gap of the played arm.
void accumulate_regret(RegretTrace& trace, const GapProfile& gaps, long t, int arm);

} // namespace osfib
