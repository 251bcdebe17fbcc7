#include "osfib/monitors.hpp"

#include <algorithm>
#include <cmath>

namespace osfib {

ElimTrace run_elim_instrumented(const InstanceSpec& inst, long horizon, RngStream& env_stream) {
    ElimTrace trace;
    trace.k = inst.k;
    trace.horizon = horizon;
    trace.rows.reserve(static_cast<std::size_t>(horizon));
    ElimState state = make_elim_state(inst.k, horizon);
    for (long t = 1; t <= horizon; ++t) {
        ElimTraceRow row;
        row.active = state.active; // S_t, before this round's filter moves on
        const int played = elim_select(state);
        const RoundSample sample = sample_round(inst, env_stream);
        elim_update(state, t, observation_slice(inst.k, played, sample.rewards));
        row.emp_means = state.emp_means; // means now include round t
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

EventLog monitor_run(const InstanceSpec& inst, const ElimTrace& trace) {
    if (trace.k != inst.k) throw Error("monitor_run: trace and instance disagree on K");
    const long horizon = static_cast<long>(trace.rows.size());
    const double best_mean = inst.means[static_cast<std::size_t>(inst.best - 1)];

    EventLog log;
    log.sampling_nice.reserve(trace.rows.size());
    log.procedure_nice.reserve(trace.rows.size());

    for (long t = 1; t <= horizon; ++t) {
        const double radius = confidence_radius(t, trace.k, trace.horizon);

        bool sampling = true;
        if (t >= 2) { // the round-1 radius is infinite, so the event is vacuous there
            const ElimTraceRow& prev = trace.rows[static_cast<std::size_t>(t - 2)];
            for (int arm : prev.active) {
                const double err = std::abs(prev.emp_means[static_cast<std::size_t>(arm - 1)] -
                                            inst.means[static_cast<std::size_t>(arm - 1)]);
                if (!(err < radius)) {
                    sampling = false;
                    break;
                }
            }
        }
        log.sampling_nice.push_back(sampling ? 1 : 0);

        const ElimTraceRow& row = trace.rows[static_cast<std::size_t>(t - 1)];
        bool procedure = std::binary_search(row.active.begin(), row.active.end(), inst.best);
        if (procedure) {
            for (int arm : row.active) {
                if (best_mean - inst.means[static_cast<std::size_t>(arm - 1)] > 4.0 * radius) {
                    procedure = false;
                    break;
                }
            }
        }
        log.procedure_nice.push_back(procedure ? 1 : 0);
        if (!procedure && log.all_nice) {
            log.all_nice = false;
            log.first_bad_round = t;
        }
    }
    return log;
}

bool implication_holds(const EventLog& log) {
    for (std::size_t t = 1; t < log.procedure_nice.size(); ++t) {
        if (log.procedure_nice[t - 1] && !log.procedure_nice[t] && log.sampling_nice[t]) {
            return false;
        }
    }
    return true;
}

} // namespace osfib
