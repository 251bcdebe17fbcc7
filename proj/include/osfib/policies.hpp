#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "osfib/core.hpp"
#include "osfib/rng.hpp"

// Decision policies. All of them speak 1-indexed arms and break argmax ties
// toward the smallest index.
//
// The elimination policy keeps a surviving set, plays its smallest index
// (which maximizes how many arms the one-sided feedback reveals), and drops
// any arm whose empirical mean trails the best empirical mean by more than
// twice the confidence radius
//
//     radius(t) = sqrt(ln(K T^2) / (2 (t-1))),   radius(1) = +inf.
//
// The +inf at t=1 only ever feeds the elimination comparison, where it
// disables the filter for the first round; it never enters a mean.

namespace osfib {

// ---------------------------------------------------------------------------
// Elimination policy state and transitions

struct ElimState {
    int k = 0;
    long horizon = 0;
    long round = 1;                // next round to play
    std::vector<int> active;       // surviving arms, ascending
    std::vector<double> emp_means; // per arm; frozen once the arm is dropped
};

ElimState make_elim_state(int k, long horizon);

double confidence_radius(long t, int k, long horizon);

// min of the surviving set; the state is unchanged.
int elim_select(const ElimState& state);

// Folds the round-t observations into the surviving arms' running means,
// then applies the elimination filter with the radius for round t+1.
// The slice must cover every surviving arm.
void elim_update(ElimState& state, long t, const ObservationSlice& slice);

// ---------------------------------------------------------------------------
// Doubling segments for unknown horizons

struct DoublingSegment {
    int segment = 0;    // i, so rounds 2^i .. 2^(i+1)-1
    long horizon = 1;   // 2^i, the inner run's known horizon
    long inner_round = 1;
};

DoublingSegment doubling_segment(long t);

// ---------------------------------------------------------------------------
// Exponential-weights baseline pieces (exposed for exactness tests)

// Mixed distribution p = (1-gamma) w/|w| + gamma/K.
std::vector<double> exp3rtb_probs(const std::vector<double>& weights, double gamma);

// Importance-weighted estimates under one-sided feedback: arm i is observed
// iff the played arm is <= i, so Pr{i observed} = p_1 + ... + p_i.
// `values` holds the observed rewards for arms first..K; unobserved arms
// get estimate zero.
std::vector<double> exp3rtb_estimates(const std::vector<double>& probs, int first,
                                      const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Follow-the-Leader prediction

// Smallest index with the largest cumulative reward.
int ftl_predict(const std::vector<double>& cumulative_rewards);

// ---------------------------------------------------------------------------
// Uniform policy interface for the simulation loop

class Policy {
public:
    virtual ~Policy() = default;
    virtual std::string_view name() const = 0;
    virtual int select(long t) = 0;
    virtual void observe(long t, const ObservationSlice& slice) = 0;
};

class ElimPolicy : public Policy {
public:
    ElimPolicy(int k, long horizon) : state_(make_elim_state(k, horizon)) {}
    std::string_view name() const override { return "elim"; }
    int select(long t) override;
    void observe(long t, const ObservationSlice& slice) override;
    const ElimState& state() const { return state_; }

private:
    ElimState state_;
};

// Restarts a fresh elimination run on every power-of-two segment, with the
// segment length as the known horizon. Nothing carries over between segments.
class ElimDoublingPolicy : public Policy {
public:
    explicit ElimDoublingPolicy(int k) : k_(k) {}
    std::string_view name() const override { return "elim-doubling"; }
    int select(long t) override;
    void observe(long t, const ObservationSlice& slice) override;

private:
    int k_;
    int segment_ = -1;
    ElimState state_;
};

// UCB that folds every observed arm into its statistics, not just the played
// one. Round 1 plays arm 1, which observes all arms and initializes every
// counter.
class UcbNPolicy : public Policy {
public:
    explicit UcbNPolicy(int k)
        : k_(k), counts_(static_cast<std::size_t>(k), 0),
          emp_means_(static_cast<std::size_t>(k), 0.0) {}
    std::string_view name() const override { return "ucbn"; }
    int select(long t) override;
    void observe(long t, const ObservationSlice& slice) override;
    const std::vector<long>& counts() const { return counts_; }
    const std::vector<double>& emp_means() const { return emp_means_; }

private:
    int k_;
    std::vector<long> counts_;
    std::vector<double> emp_means_;
};

// Classical UCB1 under bandit feedback: plays each arm once in index order,
// then the largest index mean + sqrt(2 ln t / n_i); updates only the played
// arm even though the slice contains more.
class Ucb1Policy : public Policy {
public:
    explicit Ucb1Policy(int k)
        : k_(k), counts_(static_cast<std::size_t>(k), 0),
          emp_means_(static_cast<std::size_t>(k), 0.0) {}
    std::string_view name() const override { return "ucb1"; }
    int select(long t) override;
    void observe(long t, const ObservationSlice& slice) override;

private:
    int k_;
    int last_played_ = 0;
    std::vector<long> counts_;
    std::vector<double> emp_means_;
};

// Exponential-weights baseline with one-sided importance weighting. This is
// a documented stand-in for the adversarial one-sided algorithm it is
// compared against; that algorithm's exact parameterization is not pinned
// down here. Defaults: eta = sqrt(ln K / T), gamma = min(1, sqrt(ln K / T)).
class Exp3RtbPolicy : public Policy {
public:
    Exp3RtbPolicy(int k, long horizon, RngStream* rng, double eta = 0.0, double gamma = -1.0);
    std::string_view name() const override { return "exp3rtb"; }
    int select(long t) override;
    void observe(long t, const ObservationSlice& slice) override;
    const std::vector<double>& last_probs() const { return last_probs_; }
    double eta() const { return eta_; }
    double gamma() const { return gamma_; }

private:
    int k_;
    double eta_;
    double gamma_;
    RngStream* rng_;
    std::vector<double> weights_;
    std::vector<double> last_probs_;
};

struct PolicyOptions {
    double exp3_eta = 0.0;    // <= 0 picks the default
    double exp3_gamma = -1.0; // < 0 picks the default
};

inline constexpr const char* kPolicyNames[] = {"elim", "elim-doubling", "ucbn", "ucb1",
                                               "exp3rtb"};

// Factory for the online policies; `policy_rng` is only consumed by exp3rtb.
std::unique_ptr<Policy> make_policy(std::string_view name, int k, long horizon,
                                    RngStream* policy_rng, const PolicyOptions& options = {});

} // namespace osfib
