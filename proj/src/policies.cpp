#include "osfib/policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace osfib {

// ---------------------------------------------------------------------------
// Elimination

ElimState make_elim_state(int k, long horizon) {
    if (k < 1) throw InvalidInstanceError("elim: K must be >= 1");
    if (horizon < 1) throw InvalidInstanceError("elim: horizon must be >= 1");
    ElimState state;
    state.k = k;
    state.horizon = horizon;
    state.active.resize(static_cast<std::size_t>(k));
    std::iota(state.active.begin(), state.active.end(), 1);
    state.emp_means.assign(static_cast<std::size_t>(k), 0.0);
    return state;
}

double confidence_radius(long t, int k, long horizon) {
    if (t <= 1) return std::numeric_limits<double>::infinity();
    const double log_term = std::log(static_cast<double>(k)) +
                            2.0 * std::log(static_cast<double>(horizon));
    return std::sqrt(log_term / (2.0 * static_cast<double>(t - 1)));
}

int elim_select(const ElimState& state) {
    if (state.active.empty()) throw Error("elim: surviving set is empty");
    return state.active.front();
}

void elim_update(ElimState& state, long t, const ObservationSlice& slice) {
    if (t != state.round) throw Error("elim: update round mismatch");
    if (state.active.empty()) throw Error("elim: surviving set is empty");
    if (slice.first > state.active.front()) {
        throw FeedbackContractError("elim: slice does not cover every surviving arm");
    }

    // Running average; every surviving arm has been observed in all t rounds,
    // so this equals its full-history empirical mean.
    const double keep = static_cast<double>(t - 1) / static_cast<double>(t);
    const double fold = 1.0 / static_cast<double>(t);
    for (int arm : state.active) {
        double& mean = state.emp_means[static_cast<std::size_t>(arm - 1)];
        mean = mean * keep + slice.value_for(arm) * fold;
    }

    int leader = state.active.front();
    for (int arm : state.active) {
        if (state.emp_means[static_cast<std::size_t>(arm - 1)] >
            state.emp_means[static_cast<std::size_t>(leader - 1)]) {
            leader = arm;
        }
    }

    const double threshold = 2.0 * confidence_radius(t + 1, state.k, state.horizon);
    const double leader_mean = state.emp_means[static_cast<std::size_t>(leader - 1)];
    std::erase_if(state.active, [&](int arm) {
        return leader_mean - state.emp_means[static_cast<std::size_t>(arm - 1)] > threshold;
    });

    state.round = t + 1;
}

int ElimPolicy::select(long) { return elim_select(state_); }

void ElimPolicy::observe(long t, const ObservationSlice& slice) {
    elim_update(state_, t, slice);
}

// ---------------------------------------------------------------------------
// Doubling

DoublingSegment doubling_segment(long t) {
    if (t < 1) throw Error("doubling: rounds start at 1");
    DoublingSegment seg;
    seg.segment = 0;
    seg.horizon = 1;
    while (seg.horizon * 2 <= t) {
        seg.horizon *= 2;
        ++seg.segment;
    }
    seg.inner_round = t - seg.horizon + 1;
    return seg;
}

int ElimDoublingPolicy::select(long t) {
    const DoublingSegment seg = doubling_segment(t);
    if (seg.segment != segment_) {
        state_ = make_elim_state(k_, seg.horizon);
        segment_ = seg.segment;
    }
    return elim_select(state_);
}

void ElimDoublingPolicy::observe(long t, const ObservationSlice& slice) {
    elim_update(state_, doubling_segment(t).inner_round, slice);
}

// ---------------------------------------------------------------------------
// UCB variants

namespace {

int ucb_argmax(int k, const std::vector<double>& emp_means, const std::vector<long>& counts,
               long t) {
    int best = 1;
    double best_index = -std::numeric_limits<double>::infinity();
    const double log_t = std::log(static_cast<double>(t));
    for (int arm = 1; arm <= k; ++arm) {
        const std::size_t idx = static_cast<std::size_t>(arm - 1);
        const double bonus = std::sqrt(2.0 * log_t / static_cast<double>(counts[idx]));
        const double value = emp_means[idx] + bonus;
        if (value > best_index) {
            best_index = value;
            best = arm;
        }
    }
    return best;
}

void fold_observation(std::vector<long>& counts, std::vector<double>& emp_means, int arm,
                      double value) {
    const std::size_t idx = static_cast<std::size_t>(arm - 1);
    ++counts[idx];
    emp_means[idx] += (value - emp_means[idx]) / static_cast<double>(counts[idx]);
}

} // namespace

int UcbNPolicy::select(long t) {
    if (t <= 1) return 1; // observes every arm, so all counters start at 1
    return ucb_argmax(k_, emp_means_, counts_, t);
}

void UcbNPolicy::observe(long, const ObservationSlice& slice) {
    for (int arm = slice.first; arm <= k_; ++arm) {
        fold_observation(counts_, emp_means_, arm, slice.value_for(arm));
    }
}

int Ucb1Policy::select(long t) {
    last_played_ = (t <= k_) ? static_cast<int>(t) : ucb_argmax(k_, emp_means_, counts_, t);
    return last_played_;
}

void Ucb1Policy::observe(long, const ObservationSlice& slice) {
    if (last_played_ < slice.first) throw FeedbackContractError("ucb1: played arm not in slice");
    fold_observation(counts_, emp_means_, last_played_, slice.value_for(last_played_));
}

// ---------------------------------------------------------------------------
// Exponential weights with one-sided importance weighting

std::vector<double> exp3rtb_probs(const std::vector<double>& weights, double gamma) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double k = static_cast<double>(weights.size());
    std::vector<double> probs(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        probs[i] = (1.0 - gamma) * weights[i] / total + gamma / k;
    }
    return probs;
}

std::vector<double> exp3rtb_estimates(const std::vector<double>& probs, int first,
                                      const std::vector<double>& values) {
    std::vector<double> estimates(probs.size(), 0.0);
    double observe_prob = 0.0; // Pr{played arm <= i}
    for (int arm = 1; arm <= static_cast<int>(probs.size()); ++arm) {
        observe_prob += probs[static_cast<std::size_t>(arm - 1)];
        if (arm < first) continue;
        estimates[static_cast<std::size_t>(arm - 1)] =
            values[static_cast<std::size_t>(arm - first)] / observe_prob;
    }
    return estimates;
}

Exp3RtbPolicy::Exp3RtbPolicy(int k, long horizon, RngStream* rng, double eta, double gamma)
    : k_(k), rng_(rng), weights_(static_cast<std::size_t>(k), 1.0) {
    if (k < 1) throw InvalidInstanceError("exp3rtb: K must be >= 1");
    const double rate = std::sqrt(std::log(static_cast<double>(k)) /
                                  static_cast<double>(std::max<long>(horizon, 1)));
    eta_ = eta > 0.0 ? eta : rate;
    gamma_ = gamma >= 0.0 ? gamma : std::min(1.0, rate);
}

int Exp3RtbPolicy::select(long) {
    last_probs_ = exp3rtb_probs(weights_, gamma_);
    // Inverse-CDF sampling: exactly one stream draw per round.
    const double u = rng_->uniform();
    double cum = 0.0;
    for (int arm = 1; arm <= k_; ++arm) {
        cum += last_probs_[static_cast<std::size_t>(arm - 1)];
        if (u < cum) return arm;
    }
    return k_;
}

void Exp3RtbPolicy::observe(long, const ObservationSlice& slice) {
    const std::vector<double> estimates = exp3rtb_estimates(last_probs_, slice.first, slice.values);
    double max_weight = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        weights_[i] *= std::exp(eta_ * estimates[i]);
        max_weight = std::max(max_weight, weights_[i]);
    }
    // Rescale so the weights never overflow; probabilities are unchanged.
    for (double& w : weights_) w /= max_weight;
}

// ---------------------------------------------------------------------------
// Follow-the-Leader

int ftl_predict(const std::vector<double>& cumulative_rewards) {
    if (cumulative_rewards.empty()) throw InvalidInstanceError("ftl: empty reward vector");
    const auto it = std::max_element(cumulative_rewards.begin(), cumulative_rewards.end());
    return static_cast<int>(it - cumulative_rewards.begin()) + 1;
}

// ---------------------------------------------------------------------------

std::unique_ptr<Policy> make_policy(std::string_view name, int k, long horizon,
                                    RngStream* policy_rng, const PolicyOptions& options) {
    if (name == "elim") return std::make_unique<ElimPolicy>(k, horizon);
    if (name == "elim-doubling") return std::make_unique<ElimDoublingPolicy>(k);
    if (name == "ucbn") return std::make_unique<UcbNPolicy>(k);
    if (name == "ucb1") return std::make_unique<Ucb1Policy>(k);
    if (name == "exp3rtb") {
        return std::make_unique<Exp3RtbPolicy>(k, horizon, policy_rng, options.exp3_eta,
                                               options.exp3_gamma);
    }
    throw Error("unknown policy: " + std::string(name));
}

} // namespace osfib
