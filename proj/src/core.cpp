#include "osfib/core.hpp"

#include <algorithm>
#include <utility>

namespace osfib {

int best_arm(const std::vector<double>& means) {
    if (means.empty()) {
        throw InvalidInstanceError("best_arm: empty mean vector");
    }
    int best = 1;
    for (int i = 1; i <= static_cast<int>(means.size()); ++i) {
        const double m = means[static_cast<std::size_t>(i - 1)];
        if (m < 0.0 || m > 1.0) {
            throw InvalidInstanceError("best_arm: mean outside [0,1]");
        }
        if (m > means[static_cast<std::size_t>(best - 1)]) {
            best = i; // strict improvement only: ties keep the smallest index
        }
    }
    return best;
}

InstanceSpec make_custom_instance(std::vector<double> means, Family family, std::string label) {
    InstanceSpec inst;
    inst.best = best_arm(means); // validates entries
    inst.k = static_cast<int>(means.size());
    inst.means = std::move(means);
    inst.family = family;
    inst.label = std::move(label);
    return inst;
}

GapProfile gap_profile(const InstanceSpec& inst) {
    GapProfile profile;
    const double best_mean = inst.means[static_cast<std::size_t>(inst.best - 1)];
    profile.gaps.reserve(inst.means.size());
    for (double m : inst.means) {
        profile.gaps.push_back(best_mean - m);
    }
    profile.sorted_prefix.assign(profile.gaps.begin(), profile.gaps.begin() + inst.best);
    std::sort(profile.sorted_prefix.begin(), profile.sorted_prefix.end(), std::greater<>());
    return profile;
}

ObservationSlice observation_slice(int k, int played, const std::vector<double>& rewards) {
    if (played < 1 || played > k) {
        throw InvalidArmError("observation_slice: arm " + std::to_string(played) +
                              " outside [1," + std::to_string(k) + "]");
    }
    if (static_cast<int>(rewards.size()) != k) {
        throw InvalidInstanceError("observation_slice: reward vector length mismatch");
    }
    ObservationSlice slice;
    slice.first = played;
    slice.values.assign(rewards.begin() + (played - 1), rewards.end());
    return slice;
}

void accumulate_regret(RegretTrace& trace, const GapProfile& gaps, long t, int arm) {
    if (arm < 1 || arm > static_cast<int>(gaps.gaps.size())) {
        throw InvalidArmError("accumulate_regret: arm out of range");
    }
    const double increment = gaps.gaps[static_cast<std::size_t>(arm - 1)];
    const double prev = trace.rows.empty() ? 0.0 : trace.rows.back().cumulative;
    trace.rows.push_back(RegretRow{t, arm, increment, prev + increment});
}

} // namespace osfib
