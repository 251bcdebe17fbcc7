#include "osfib/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace osfib {

double regret_log_term(int k, long horizon) {
    return std::log(static_cast<double>(k)) + 2.0 * std::log(static_cast<double>(horizon));
}

double regret_constant(int k, long horizon) { return 8.0 * regret_log_term(k, horizon); }

double bound_indep(long horizon, int k) {
    return 4.0 * std::sqrt(2.0 * static_cast<double>(horizon) * regret_log_term(k, horizon)) + 3.0;
}

double bound_doubling(long horizon, int k) {
    return 20.0 * std::sqrt(static_cast<double>(horizon) * regret_log_term(k, horizon)) +
           3.0 * std::log2(static_cast<double>(horizon)) + 3.0;
}

namespace {

// Validated descending view of the gaps feeding the closed forms.
std::vector<double> descending_prefix(const std::vector<double>& gaps) {
    if (gaps.empty()) throw DegenerateGapError("gap prefix is empty");
    std::vector<double> sorted(gaps);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (double g : sorted) {
        if (g < 0.0) throw DegenerateGapError("negative gap");
    }
    if (sorted.back() != 0.0) throw DegenerateGapError("the best arm's gap (zero) is missing");
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i] == 0.0) {
            throw DegenerateGapError("zero gap below the best arm divides the bound");
        }
    }
    return sorted;
}

double closed_form(const std::vector<double>& sorted_desc, double c) {
    const std::size_t m = sorted_desc.size();
    if (m == 1) return 0.0;
    double value = sorted_desc[0] + c / sorted_desc[0];
    for (std::size_t i = 1; i + 1 < m; ++i) {
        value += c * (1.0 / (sorted_desc[i] * sorted_desc[i]) -
                      1.0 / (sorted_desc[i - 1] * sorted_desc[i - 1])) *
                 sorted_desc[i];
    }
    return value;
}

} // namespace

double bound_dep_c(const GapProfile& gaps, double c) {
    return closed_form(descending_prefix(gaps.sorted_prefix), c) + 2.0;
}

double bound_dep(const GapProfile& gaps, long horizon, int k) {
    return bound_dep_c(gaps, regret_constant(k, horizon));
}

double bound_corollary_c(const GapProfile& gaps, double c) {
    const std::vector<double> sorted = descending_prefix(gaps.sorted_prefix);
    const std::size_t m = sorted.size();
    if (m == 1) return 2.0;
    const double smallest_positive = sorted[m - 2];
    return (c / (smallest_positive * smallest_positive) + 1.0) * sorted[0] + 2.0;
}

double bound_corollary(const GapProfile& gaps, long horizon, int k) {
    return bound_corollary_c(gaps, regret_constant(k, horizon));
}

double lp_closed_form(const LpInstance& inst) {
    return closed_form(descending_prefix(inst.gaps), inst.c);
}

OracleResult lp_bruteforce(const LpInstance& inst) {
    const std::size_t m = inst.gaps.size();
    if (m == 0) throw DegenerateGapError("lp_bruteforce: no gaps");
    if (inst.c <= 0.0) throw Error("lp_bruteforce: C must be positive");
    if (inst.gaps.back() != 0.0) throw DegenerateGapError("lp_bruteforce: last gap must be zero");
    for (double g : inst.gaps) {
        if (g < 0.0) throw DegenerateGapError("lp_bruteforce: negative gap");
    }
    if (m > 8) throw OracleTooLargeError("lp_bruteforce: more than 8 gaps");

    constexpr long kMaxPrefix = 10000;
    long max_prefix = 0;
    std::vector<double> prefix_caps(m, 0.0); // constraint value at each position
    for (std::size_t j = 0; j < m; ++j) {
        const double g = inst.gaps[j];
        if (g == 0.0) continue; // a positive count there adds nothing and only tightens later prefixes
        prefix_caps[j] = inst.c / (g * g) + 1.0;
        const long cap = static_cast<long>(std::floor(prefix_caps[j]));
        if (cap > kMaxPrefix) throw OracleTooLargeError("lp_bruteforce: prefix cap above 10^4");
        max_prefix = std::max(max_prefix, cap);
    }

    // Exhaust the reachable prefix sums position by position. value[s] is the
    // best objective whose counts so far sum to s; a zero count leaves the
    // state alone, a positive count v moves s -> s+v when s+v satisfies the
    // position's constraint. The objective gain v * g_j is linear in v, so a
    // running maximum of value[s] - g_j * s turns each sweep into one pass.
    const std::size_t states = static_cast<std::size_t>(max_prefix) + 1;
    const double neg_inf = -std::numeric_limits<double>::infinity();
    std::vector<double> value(states, neg_inf);
    value[0] = 0.0;
    std::vector<std::vector<long>> jump(m); // jump[j][s]: count taken at j arriving at s
    for (std::size_t j = 0; j < m; ++j) {
        const double g = inst.gaps[j];
        if (g == 0.0) continue;
        jump[j].assign(states, 0);
        std::vector<double> next(value);
        double best_base = neg_inf; // max over s' < s of value[s'] - g s'
        long best_from = -1;
        for (long s = 1; s < static_cast<long>(states); ++s) {
            const double candidate_base = value[static_cast<std::size_t>(s - 1)] -
                                          g * static_cast<double>(s - 1);
            if (candidate_base > best_base) {
                best_base = candidate_base;
                best_from = s - 1;
            }
            if (static_cast<double>(s) > prefix_caps[j]) continue;
            const double with_jump = g * static_cast<double>(s) + best_base;
            if (with_jump > next[static_cast<std::size_t>(s)]) {
                next[static_cast<std::size_t>(s)] = with_jump;
                jump[j][static_cast<std::size_t>(s)] = s - best_from;
            }
        }
        value = std::move(next);
    }

    OracleResult result;
    result.counts.assign(m, 0);
    long at = 0;
    for (long s = 0; s < static_cast<long>(states); ++s) {
        if (value[static_cast<std::size_t>(s)] > result.value) {
            result.value = value[static_cast<std::size_t>(s)];
            at = s;
        }
    }
    for (std::size_t j = m; j-- > 0;) {
        if (inst.gaps[j] == 0.0 || jump[j].empty()) continue;
        const long v = jump[j][static_cast<std::size_t>(at)];
        result.counts[j] = v;
        at -= v;
    }
    return result;
}

} // namespace osfib
