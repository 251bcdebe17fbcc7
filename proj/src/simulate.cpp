#include "osfib/simulate.hpp"

#include <algorithm>

namespace osfib {

std::vector<long> default_checkpoints(long horizon) {
    std::vector<long> points;
    for (long p = 1; p <= horizon && p > 0; p *= 2) points.push_back(p);
    const long step = std::max<long>(1, horizon / 100);
    for (long t = step; t <= horizon; t += step) points.push_back(t);
    points.push_back(horizon);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

RunResult simulate_run(const InstanceSpec& inst, std::string_view policy_name, long horizon,
                       std::uint64_t seed, std::uint64_t run_index,
                       const std::vector<long>& checkpoints, const PolicyOptions& options) {
    if (horizon < 1) throw Error("simulate_run: horizon must be >= 1");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > horizon ||
            (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
            throw Error("simulate_run: checkpoints must be sorted and within [1, horizon]");
        }
    }

    RngStream env_stream(seed, run_index, StreamLane::environment);
    RngStream policy_stream(seed, run_index, StreamLane::policy);
    const auto policy = make_policy(policy_name, inst.k, horizon, &policy_stream, options);
    const GapProfile gaps = gap_profile(inst);

    RunResult result;
    result.checkpoints = checkpoints;
    result.cum_regret.reserve(checkpoints.size());
    result.arms.reserve(checkpoints.size());

    double cum = 0.0;
    std::size_t next_checkpoint = 0;
    for (long t = 1; t <= horizon; ++t) {
        const RoundSample sample = sample_round(inst, env_stream);
        const int played = policy->select(t);
        const ObservationSlice slice = observation_slice(inst.k, played, sample.rewards);
        policy->observe(t, slice);
        cum += gaps.gaps[static_cast<std::size_t>(played - 1)];
        if (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == t) {
            result.cum_regret.push_back(cum);
            result.arms.push_back(played);
            ++next_checkpoint;
        }
    }
    return result;
}

} // namespace osfib
