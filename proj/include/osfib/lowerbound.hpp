#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "osfib/core.hpp"
#include "osfib/policies.hpp"

// Exact-arithmetic tail checks and the bandit-with-prediction experiments.
//
// Tail probabilities of a fair binomial are computed as exact rationals
// (big-integer numerator over 2^n), so the inequality checks against the
// double-precision bound e^{-(9/2) n d^2} carry no rounding doubt: the double
// converts to a rational exactly and the comparison is exact.

namespace osfib {

// K Bernoulli instances; member j has mean (1+eps)/2 at arm j and 1/2 elsewhere.
struct InstanceFamily {
    int k = 0;
    double eps = 0.0;
};

InstanceFamily make_family(int k, double eps);
InstanceSpec family_member(const InstanceFamily& family, int member);

// sum_{l=0..m} C(n,l), exact. Guard: n <= 2000. A negative m gives 0.
mpz_class binom_partial_sum(int n, int m);

// Pr{ Binomial(n, 1/2) <= m } as an exact rational.
mpq_class binom_lower_tail_exact(int n, int m);

struct TailCheckResult {
    int n = 0;
    double delta = 0.0;
    mpq_class exact_tail;  // Pr{ sample mean < (1 - delta) / 2 }, exact
    double bound = 0.0;    // e^{-(9/2) n delta^2}
    bool holds = false;    // exact_tail >= bound
    bool precondition_met = false; // delta <= 1/2 and delta^2 n > 6
};

// The threshold "mean strictly below (1-delta)/2" becomes the largest integer
// strictly below n(1-delta)/2, computed in exact rational arithmetic.
TailCheckResult check_reverse_chernoff(int n, double delta);

struct StirlingCheckResult {
    int n = 0;
    int l = 0;
    mpz_class lhs;      // C(n, l), exact
    double rhs = 0.0;   // (1/(e sqrt(2 pi l))) (n/l)^l (n/(n-l))^{n-l}
    bool holds = false; // lhs >= rhs
};

// Requires 1 <= l <= n-1.
StirlingCheckResult check_stirling_corollary(int n, int l);

// Maps per-arm cumulative rewards to a 1-based predicted best arm.
using Predictor = std::function<int(const std::vector<double>&)>;

struct BwpMemberResult {
    int member = 0;
    double success_freq = 0.0;
    double std_err = 0.0;
};

struct BwpResult {
    long horizon = 0;
    int runs = 0;
    std::vector<BwpMemberResult> members;
    double aggregate = 0.0; // (1/K) sum of per-member success frequencies
    double aggregate_se = 0.0;
};

// Monte Carlo success frequency of the predictor given the first T rounds of
// every arm, per family member. Cumulative rewards of arm i are sampled as
// Binomial(T, mu_i) directly; any predictor of the totals sees the same
// distribution as under round-by-round simulation.
BwpResult bwp_accuracy(const InstanceFamily& family, long horizon, int runs,
                       const Predictor& predictor, std::uint64_t seed);

inline Predictor ftl_predictor() {
    return [](const std::vector<double>& totals) { return ftl_predict(totals); };
}

struct ScalingRow {
    int k = 0;
    double eps = 0.0;
    double mean_regret = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    int runs = 0;
};

// Mean pseudo-regret of a policy on the family with eps = sqrt(ln K / T),
// members cycled uniformly across runs; one row per K.
std::vector<ScalingRow> regret_scaling_probe(const std::vector<int>& ks, long horizon, int runs,
                                             std::string_view policy, std::uint64_t seed);

} // namespace osfib
