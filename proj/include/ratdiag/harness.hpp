#pragma once

#include <vector>

#include "ratdiag/asym.hpp"

namespace ratdiag {

// One exact-vs-predicted comparison. All magnitudes live in log space so
// k ~ 100 diagonals (values like 9^101) never overflow.
struct ConvergenceRow {
    long k = 0;
    int exact_sign = 0;
    Real exact_log{};
    int pred_sign = 0;
    Real pred_log{};
    double ratio = 0.0; // sign product * exp(exact_log - pred_log)
};

struct ConvergenceTable {
    AsymptoticTerm term;
    std::vector<ConvergenceRow> rows;
};

struct VerificationReport {
    DirVector direction;
    AsymptoticTerm::Kind regime;
    std::vector<ConvergenceRow> rows;
    double final_error = 0.0; // |last ratio - 1|
    bool trend_monotone = false;
    bool pass = false;
    double tolerance = 0.0;
};

// Exact f(kp, kq) against the evaluated main term for each k. Expansion
// cost is the full max(k)*p by max(k)*q rectangle.
ConvergenceTable convergence_table(const GFModel& m, const Int& p,
                                   const Int& q, const std::vector<long>& ks,
                                   int jobs = 1);

// pass <=> final error <= tol and |ratio-1| decreasing over the last half
// of the rows. Throws Errc::too_few_rows for fewer than 3 rows.
VerificationReport check_convergence(const ConvergenceTable& table,
                                     double tol);

// Empirical forward ratios along the diagonal vs. their predicted limit.
struct HornRow {
    long k = 0;
    Rational ratio_z; // f(x+1, y) / f(x, y)
    Rational ratio_w; // f(x, y+1) / f(x, y)
    double error = 0.0; // max componentwise relative deviation from the limit
};

struct HornTable {
    Rational limit_z;
    Rational limit_w;
    std::vector<HornRow> rows;
};

// Throws Errc::zero_coefficient if any coefficient entering a ratio is zero
// (the fate of every direction when condition (III) is dropped).
HornTable horn_table(const GFModel& m, const Int& p, const Int& q,
                     const std::vector<long>& ks, int jobs = 1);

// True iff the term base designated for (p, q) is the strict unique
// maximizer of p ln z + q ln w among the feasible candidates (off-axis
// polygon vertices and on-segment saddle points). False on boundary rays.
bool dominance_check(const GFModel& m, const Fan& fan, const Int& p,
                     const Int& q);

} // namespace ratdiag
