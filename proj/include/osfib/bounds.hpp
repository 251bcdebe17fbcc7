#pragma once

#include <string>
#include <vector>

#include "osfib/core.hpp"

// Closed-form regret bound evaluators and the exact integer-program oracle
// their gap-dependent form is checked against.
//
// Throughout, C defaults to 8 ln(K T^2); the oracle and the closed form also
// accept an explicit C so tests can keep the enumeration small.

namespace osfib {

// ln(K T^2), evaluated as ln K + 2 ln T.
double regret_log_term(int k, long horizon);

// C = 8 ln(K T^2).
double regret_constant(int k, long horizon);

// Distribution-independent bound: 4 sqrt(2 T ln(K T^2)) + 3.
double bound_indep(long horizon, int k);

// Doubling-trick bound: 20 sqrt(T ln(K T^2)) + 3 log2 T + 3.
double bound_doubling(long horizon, int k);

// Gap-dependent bound over the descending gap prefix d(1) >= ... >= d(m) = 0:
//
//   d(1) + C/d(1) + C sum_{i=2..m-1} (1/d(i)^2 - 1/d(i-1)^2) d(i) + 2
//
// and exactly 2 when the best arm has index 1 (every gap term is vacuous;
// the constant covers the low-probability bad event).
double bound_dep(const GapProfile& gaps, long horizon, int k);
double bound_dep_c(const GapProfile& gaps, double c);

// Coarser corollary: (C/d(m-1)^2 + 1) d(1) + 2, and 2 when m = 1.
double bound_corollary(const GapProfile& gaps, long horizon, int k);
double bound_corollary_c(const GapProfile& gaps, double c);

// The integer program: over nonnegative integers a_1..a_m, maximize
// sum_j a_j g_j subject to sum_{i<=j} a_i <= C/g_j^2 + 1 at every j < m with
// a_j > 0. The last gap must be zero (the best arm's own position).
struct LpInstance {
    std::vector<double> gaps;
    double c = 1.0;
};

struct OracleResult {
    double value = 0.0;
    std::vector<long> counts; // an optimal assignment, one entry per gap
};

// Exact optimum by exhausting the reachable prefix-sum states in order.
// Guard: at most 8 gaps and every cap floor(C/g^2) + 1 at most 10^4.
OracleResult lp_bruteforce(const LpInstance& inst);

// The closed-form upper bound on the program's optimum (sorts a copy of the
// gaps descending first). Zero except at the last sorted position is
// rejected: the formula divides by those gaps.
double lp_closed_form(const LpInstance& inst);

} // namespace osfib
