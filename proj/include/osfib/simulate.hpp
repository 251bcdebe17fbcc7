#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "osfib/core.hpp"
#include "osfib/environments.hpp"
#include "osfib/policies.hpp"

// The round loop: environment draw, one-sided slice, policy update, true-mean
// regret accounting. One replication owns its policy state and two streams
// (environment and policy lanes of the same (seed, run) key), so replications
// are independent and can run concurrently in any order.

namespace osfib {

struct RunResult {
    std::vector<long> checkpoints;
    std::vector<double> cum_regret; // cumulative pseudo-regret at each checkpoint
    std::vector<int> arms;          // arm played at each checkpoint round

    double final_regret() const { return cum_regret.empty() ? 0.0 : cum_regret.back(); }
};

// Powers of two up to T, every multiple of max(1, T/100), and T itself.
std::vector<long> default_checkpoints(long horizon);

RunResult simulate_run(const InstanceSpec& inst, std::string_view policy_name, long horizon,
                       std::uint64_t seed, std::uint64_t run_index,
                       const std::vector<long>& checkpoints, const PolicyOptions& options = {});

} // namespace osfib
