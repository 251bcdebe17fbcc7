#include "osfib/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "osfib/simulate.hpp"
#include "osfib/stats.hpp"

namespace osfib {

InstanceFamily make_family(int k, double eps) {
    if (k < 2) throw InvalidInstanceError("family: need at least 2 arms");
    if (!(eps > 0.0) || eps > 1.0) throw InvalidInstanceError("family: eps must be in (0,1]");
    return InstanceFamily{k, eps};
}

InstanceSpec family_member(const InstanceFamily& family, int member) {
    if (member < 1 || member > family.k) throw InvalidArmError("family: member out of range");
    std::vector<double> means(static_cast<std::size_t>(family.k), 0.5);
    means[static_cast<std::size_t>(member - 1)] = (1.0 + family.eps) / 2.0;
    return make_custom_instance(std::move(means), Family::bernoulli,
                                "family k=" + std::to_string(family.k) + " member=" +
                                    std::to_string(member));
}

mpz_class binom_partial_sum(int n, int m) {
    if (n < 0 || n > 2000) throw OracleTooLargeError("binom: n must be in [0, 2000]");
    if (m < 0) return 0;
    m = std::min(m, n);
    mpz_class coeff = 1; // C(n, 0)
    mpz_class sum = 1;
    for (int l = 0; l < m; ++l) {
        coeff *= n - l;
        coeff /= l + 1; // exact: C(n,l+1) = C(n,l) (n-l)/(l+1)
        sum += coeff;
    }
    return sum;
}

mpq_class binom_lower_tail_exact(int n, int m) {
    mpq_class tail(binom_partial_sum(n, m), mpz_class(1) << n);
    tail.canonicalize();
    return tail;
}

TailCheckResult check_reverse_chernoff(int n, double delta) {
    TailCheckResult result;
    result.n = n;
    result.delta = delta;
    result.precondition_met = delta <= 0.5 && delta * delta * n > 6.0;
    result.bound = std::exp(-4.5 * static_cast<double>(n) * delta * delta);

    // Largest integer strictly below n(1-delta)/2, in exact rationals: the
    // double delta converts exactly, so no rounding can shift the threshold.
    mpq_class cutoff(1);
    cutoff -= mpq_class(delta);
    cutoff *= n;
    cutoff /= 2;
    mpz_class floor_cut;
    mpz_fdiv_q(floor_cut.get_mpz_t(), cutoff.get_num().get_mpz_t(), cutoff.get_den().get_mpz_t());
    if (cutoff == mpq_class(floor_cut)) floor_cut -= 1;
    const long m = floor_cut.get_si();

    result.exact_tail = m < 0 ? mpq_class(0) : binom_lower_tail_exact(n, static_cast<int>(m));
    result.holds = result.exact_tail >= mpq_class(result.bound);
    return result;
}

StirlingCheckResult check_stirling_corollary(int n, int l) {
    if (l < 1 || l > n - 1) throw Error("stirling: need 1 <= l <= n-1");
    if (n > 2000) throw OracleTooLargeError("stirling: n must be <= 2000");
    StirlingCheckResult result;
    result.n = n;
    result.l = l;
    mpz_bin_uiui(result.lhs.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(l));
    const double nd = n, ld = l;
    const double log_rhs = -1.0 - 0.5 * std::log(2.0 * std::numbers::pi * ld) +
                           ld * std::log(nd / ld) + (nd - ld) * std::log(nd / (nd - ld));
    if (log_rhs < 700.0) {
        result.rhs = std::exp(log_rhs);
        result.holds = result.lhs >= mpq_class(result.rhs);
    } else {
        // The double value would overflow; compare in log space instead. The
        // inequality has slack at least e^(5/6), far beyond the log error.
        result.rhs = std::numeric_limits<double>::infinity();
        signed long exp2;
        const double mant = mpz_get_d_2exp(&exp2, result.lhs.get_mpz_t());
        const double log_lhs = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
        result.holds = log_lhs >= log_rhs;
    }
    return result;
}

BwpResult bwp_accuracy(const InstanceFamily& family, long horizon, int runs,
                       const Predictor& predictor, std::uint64_t seed) {
    if (runs < 1) throw Error("bwp_accuracy: need at least one run");
    if (horizon < 0) throw Error("bwp_accuracy: horizon must be >= 0");
    BwpResult result;
    result.horizon = horizon;
    result.runs = runs;
    result.members.reserve(static_cast<std::size_t>(family.k));
    const double best_mean = (1.0 + family.eps) / 2.0;

    double freq_sum = 0.0;
    double var_sum = 0.0;
    std::vector<double> totals(static_cast<std::size_t>(family.k));
    for (int member = 1; member <= family.k; ++member) {
        long successes = 0;
        for (int run = 0; run < runs; ++run) {
            const std::uint64_t run_key =
                static_cast<std::uint64_t>(member - 1) * static_cast<std::uint64_t>(runs) +
                static_cast<std::uint64_t>(run);
            RngStream stream(seed, run_key, StreamLane::environment);
            for (int arm = 1; arm <= family.k; ++arm) {
                const double mu = arm == member ? best_mean : 0.5;
                totals[static_cast<std::size_t>(arm - 1)] =
                    horizon == 0 ? 0.0 : static_cast<double>(stream.binomial(horizon, mu));
            }
            if (predictor(totals) == member) ++successes;
        }
        const double freq = static_cast<double>(successes) / static_cast<double>(runs);
        const double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(runs));
        result.members.push_back(BwpMemberResult{member, freq, se});
        freq_sum += freq;
        var_sum += se * se;
    }
    result.aggregate = freq_sum / static_cast<double>(family.k);
    result.aggregate_se = std::sqrt(var_sum) / static_cast<double>(family.k);
    return result;
}

std::vector<ScalingRow> regret_scaling_probe(const std::vector<int>& ks, long horizon, int runs,
                                             std::string_view policy, std::uint64_t seed) {
    if (runs < 1) throw Error("regret_scaling_probe: need at least one run");
    std::vector<ScalingRow> rows;
    rows.reserve(ks.size());
    const std::vector<long> checkpoints{horizon};
    std::uint64_t run_key = 0;
    for (int k : ks) {
        const double eps =
            k <= 1 ? 0.0
                   : std::min(1.0, std::sqrt(std::log(static_cast<double>(k)) /
                                             static_cast<double>(horizon)));
        MeanVar acc;
        for (int run = 0; run < runs; ++run, ++run_key) {
            InstanceSpec inst =
                k <= 1 ? make_custom_instance({0.5}, Family::bernoulli, "single-arm")
                       : family_member(make_family(k, eps), 1 + run % k);
            acc.add(simulate_run(inst, policy, horizon, seed, run_key, checkpoints)
                        .final_regret());
        }
        const double half_width = kZ99 * acc.std_err();
        rows.push_back(ScalingRow{k, eps, acc.mean(), acc.mean() - half_width,
                                  acc.mean() + half_width, runs});
    }
    return rows;
}

} // namespace osfib
