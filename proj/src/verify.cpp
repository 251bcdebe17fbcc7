#include "osfib/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "osfib/bounds.hpp"
#include "osfib/lowerbound.hpp"
#include "osfib/monitors.hpp"

namespace osfib {

void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows) {
    out << "check,params,lhs,rhs,pass\n";
    for (const CheckRow& row : rows) {
        out << row.check << ',' << row.params << ',' << format_double(row.lhs) << ','
            << format_double(row.rhs) << ',' << (row.pass ? 1 : 0) << '\n';
    }
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

namespace {

std::string base_params(const ExperimentConfig& cfg) {
    std::ostringstream ss;
    ss << "k=" << cfg.k << ";t=" << cfg.horizon << ";delta=" << cfg.delta
       << ";best=" << cfg.best << ";runs=" << cfg.runs << ";seed=" << cfg.seed;
    return ss.str();
}

CheckRow upper_check(std::string name, std::string params, double lhs, double rhs) {
    return CheckRow{std::move(name), std::move(params), lhs, rhs, lhs <= rhs};
}

} // namespace

std::vector<CheckRow> verify_bounds(const ExperimentConfig& base_cfg) {
    std::vector<CheckRow> rows;
    const std::string params = base_params(base_cfg);

    ExperimentConfig cfg = base_cfg;
    cfg.algo = "elim";
    const ExperimentResult elim = run_experiment_in_memory(cfg);
    const GapProfile gaps = gap_profile(make_instance(cfg));

    rows.push_back(upper_check("thm_indep_empirical", params, elim.final_mean(),
                               bound_indep(cfg.horizon, cfg.k)));
    rows.push_back(upper_check("thm_dep_empirical", params, elim.final_ci_high(),
                               bound_dep(gaps, cfg.horizon, cfg.k)));
    rows.push_back(upper_check("corollary_empirical", params, elim.final_ci_high(),
                               bound_corollary(gaps, cfg.horizon, cfg.k)));

    cfg.algo = "elim-doubling";
    const ExperimentResult doubling = run_experiment_in_memory(cfg);
    rows.push_back(upper_check("thm_doubling_empirical", params, doubling.final_mean(),
                               bound_doubling(cfg.horizon, cfg.k)));
    return rows;
}

std::vector<CheckRow> verify_lp(int instances, std::uint64_t seed) {
    std::vector<CheckRow> rows;

    {
        const LpInstance pinned{{0.5, 0.0}, 1.0};
        const double opt = lp_bruteforce(pinned).value;
        rows.push_back(CheckRow{"lp_pinned_a", "gaps=.5/.0;c=1", opt, 2.5, opt == 2.5});
        const LpInstance pinned2{{0.5, 0.25, 0.0}, 1.0};
        const double opt2 = lp_bruteforce(pinned2).value;
        rows.push_back(CheckRow{"lp_pinned_b", "gaps=.5/.25/.0;c=1", opt2, 5.5, opt2 == 5.5});
    }

    RngStream stream(seed, 0, StreamLane::instance);
    for (int i = 0; i < instances; ++i) {
        const int m = 2 + static_cast<int>(stream.next() % 5); // up to 6 gaps
        LpInstance inst;
        inst.c = stream.uniform(0.5, 10.0);
        for (int j = 0; j + 1 < m; ++j) inst.gaps.push_back(stream.uniform(0.05, 1.0));
        std::sort(inst.gaps.begin(), inst.gaps.end(), std::greater<>());
        inst.gaps.push_back(0.0);

        std::ostringstream params;
        params << "i=" << i << ";m=" << m << ";c=" << inst.c;
        const OracleResult brute = lp_bruteforce(inst);
        const double closed = lp_closed_form(inst);
        rows.push_back(upper_check("lp_dominance", params.str(), brute.value, closed));

        // The same multiset in a shuffled order never beats the sorted order.
        LpInstance shuffled = inst;
        for (std::size_t j = shuffled.gaps.size() - 1; j > 0; --j) {
            std::swap(shuffled.gaps[j], shuffled.gaps[stream.next() % (j + 1)]);
        }
        // keep the zero in the last slot: it marks the best arm's position
        const auto zero_at = std::find(shuffled.gaps.begin(), shuffled.gaps.end(), 0.0);
        std::swap(*zero_at, shuffled.gaps.back());
        rows.push_back(upper_check("lp_permutation_dominance", params.str(),
                                   lp_bruteforce(shuffled).value, brute.value));

        GapProfile profile;
        profile.sorted_prefix = inst.gaps;
        const double dep = bound_dep_c(profile, inst.c);
        const CheckRow consistency{"eq_consistency", params.str(), dep, closed + 2.0,
                                   std::abs(dep - (closed + 2.0)) <= 1e-12 * (1.0 + closed)};
        rows.push_back(consistency);
    }
    return rows;
}

std::vector<CheckRow> verify_monitor(int k, double delta, int best, long horizon, int runs,
                                     std::uint64_t seed) {
    const InstanceSpec inst = make_uniform_gap_instance(k, best, 0.6, delta);
    long not_all_nice = 0;
    long sampling_bad_at_end = 0;
    long implication_violations = 0;
    for (int run = 0; run < runs; ++run) {
        RngStream env(seed, static_cast<std::uint64_t>(run), StreamLane::environment);
        const ElimTrace trace = run_elim_instrumented(inst, horizon, env);
        const EventLog log = monitor_run(inst, trace);
        if (!log.all_nice) ++not_all_nice;
        if (!log.sampling_nice.back()) ++sampling_bad_at_end;
        if (!implication_holds(log)) ++implication_violations;
    }

    std::ostringstream params;
    params << "k=" << k << ";t=" << horizon << ";delta=" << delta << ";runs=" << runs
           << ";seed=" << seed;

    const double t = static_cast<double>(horizon);
    const double r = static_cast<double>(runs);
    const double m_freq = static_cast<double>(not_all_nice) / r;
    const double s_freq = static_cast<double>(sampling_bad_at_end) / r;
    const double s_se = std::sqrt(s_freq * (1.0 - s_freq) / r);

    std::vector<CheckRow> rows;
    rows.push_back(upper_check("all_rounds_nice_freq", params.str(), m_freq, 2.0 / t));
    rows.push_back(upper_check("sampling_bad_freq", params.str(), s_freq,
                               2.0 / (t * t) + 3.0 * s_se));
    rows.push_back(upper_check("procedure_implies_sampling", params.str(),
                               static_cast<double>(implication_violations), 0.0));
    return rows;
}

std::vector<CheckRow> verify_chernoff(int n_max) {
    std::vector<CheckRow> rows;
    for (int n = 25; n <= n_max; n += 25) {
        for (int d = 15; d <= 50; d += 5) {
            const double delta = d / 100.0;
            const TailCheckResult check = check_reverse_chernoff(n, delta);
            if (!check.precondition_met) continue;
            std::ostringstream params;
            params << "n=" << n << ";delta=" << delta;
            rows.push_back(CheckRow{"reverse_chernoff", params.str(),
                                    check.exact_tail.get_d(), check.bound, check.holds});
        }
    }
    return rows;
}

std::vector<CheckRow> verify_stirling(int n_max) {
    std::vector<CheckRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        bool all_hold = true;
        double worst_ratio = std::numeric_limits<double>::infinity();
        int worst_l = 1;
        for (int l = 1; l <= n - 1; ++l) {
            const StirlingCheckResult check = check_stirling_corollary(n, l);
            all_hold = all_hold && check.holds;
            const double lhs_d = check.lhs.get_d();
            const double ratio = (std::isfinite(lhs_d) && std::isfinite(check.rhs))
                                     ? lhs_d / check.rhs
                                     : std::numeric_limits<double>::infinity();
            if (ratio < worst_ratio) {
                worst_ratio = ratio;
                worst_l = l;
            }
        }
        std::ostringstream params;
        params << "n=" << n << ";worst_l=" << worst_l;
        rows.push_back(CheckRow{"stirling_corollary", params.str(), worst_ratio, 1.0,
                                all_hold && worst_ratio >= 1.0});
    }
    return rows;
}

} // namespace osfib
