#pragma once

#include <cstdint>
#include <vector>

#include "osfib/core.hpp"
#include "osfib/environments.hpp"
#include "osfib/policies.hpp"

// Runtime monitors for the elimination policy's concentration events, checked
// against a fully instrumented run where the true means are known.
//
// Per round t (with S_t the set played from at round t and means after t
// folds written mean_t):
//   sampling nice:  every arm surviving into round t has |mean_{t-1} - mu|
//                   strictly inside the round-t confidence radius;
//   procedure nice: the true best arm is still in S_t and every survivor's
//                   true gap is at most four radii.
// The run is "all nice" when the procedure event holds at every round.

namespace osfib {

struct ElimTraceRow {
    std::vector<int> active;       // S_t
    std::vector<double> emp_means; // means after folding round t
};

struct ElimTrace {
    int k = 0;
    long horizon = 0;
    std::vector<ElimTraceRow> rows; // rows[t-1] describes round t
};

struct EventLog {
    std::vector<char> sampling_nice;  // index t-1
    std::vector<char> procedure_nice; // index t-1
    bool all_nice = true;
    long first_bad_round = 0; // first round where the procedure event failed, 0 if none
};

// Runs the elimination policy on the instance, recording (S_t, mean_t) per round.
ElimTrace run_elim_instrumented(const InstanceSpec& inst, long horizon, RngStream& env_stream);

EventLog monitor_run(const InstanceSpec& inst, const ElimTrace& trace);

// Whenever the procedure event first breaks at round t, the sampling event
// must have broken at t as well. Returns false if any round violates that.
bool implication_holds(const EventLog& log);

} // namespace osfib
