#include "ratdiag/harness.hpp"

#include <algorithm>

namespace ratdiag {

namespace {

int checked_int(const Int& v, const char* what) {
    if (!v.fits_sint_p())
        raise(Errc::internal, std::string(what) + " too large");
    return static_cast<int>(v.get_si());
}

PairConstants constants_for(const GFModel& m) {
    return m.factor_count() >= 2 ? decompose(m) : PairConstants{};
}

} // namespace

ConvergenceTable convergence_table(const GFModel& m, const Int& p, const Int& q,
                                   const std::vector<long>& ks, int jobs) {
    if (ks.empty()) raise(Errc::too_few_rows, "empty k list");
    std::vector<long> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) raise(Errc::internal, "k values must be >= 1");

    Fan fan = build_fan(m);
    ConvergenceTable out;
    out.term = main_term(m, fan, constants_for(m), p, q);

    const long kmax = sorted.back();
    int xmax = checked_int(out.term.direction.p * kmax, "expansion extent");
    int ymax = checked_int(out.term.direction.q * kmax, "expansion extent");
    CoeffTable table = expand(m, xmax, ymax, jobs);

    for (long k : sorted) {
        ConvergenceRow row;
        row.k = k;
        int x = checked_int(out.term.direction.p * k, "coefficient index");
        int y = checked_int(out.term.direction.q * k, "coefficient index");
        SignedLog exact = log_value(table.at(x, y));
        SignedLog pred = evaluate_log_term(out.term, k);
        row.exact_sign = exact.sign;
        row.exact_log = exact.log_abs;
        row.pred_sign = pred.sign;
        row.pred_log = pred.log_abs;
        row.ratio = exact.sign == 0
                        ? 0.0
                        : (exact.sign * pred.sign *
                           exp(exact.log_abs - pred.log_abs))
                              .convert_to<double>();
        out.rows.push_back(std::move(row));
    }
    return out;
}

VerificationReport check_convergence(const ConvergenceTable& table, double tol) {
    if (table.rows.size() < 3)
        raise(Errc::too_few_rows,
              "convergence judgment needs at least 3 rows, got " +
                  std::to_string(table.rows.size()));

    VerificationReport report;
    report.direction = table.term.direction;
    report.regime = table.term.kind;
    report.rows = table.rows;
    report.tolerance = tol;

    std::vector<double> errs;
    errs.reserve(table.rows.size());
    for (const ConvergenceRow& r : table.rows) errs.push_back(std::abs(r.ratio - 1.0));
    report.final_error = errs.back();

    report.trend_monotone = true;
    for (size_t i = errs.size() / 2; i + 1 < errs.size(); ++i)
        if (!(errs[i + 1] < errs[i])) report.trend_monotone = false;

    report.pass = report.final_error <= tol && report.trend_monotone;
    return report;
}

HornTable horn_table(const GFModel& m, const Int& p, const Int& q,
                     const std::vector<long>& ks, int jobs) {
    if (ks.empty()) raise(Errc::too_few_rows, "empty k list");
    std::vector<long> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) raise(Errc::internal, "k values must be >= 1");

    if (sgn(p) <= 0 || sgn(q) <= 0)
        raise(Errc::boundary_direction, "ratio tables need p, q > 0");
    Int g = gcd(p, q);
    DirVector d{p / g, q / g};

    const long kmax = sorted.back();
    int xmax = checked_int(d.p * kmax + 1, "expansion extent");
    int ymax = checked_int(d.q * kmax + 1, "expansion extent");
    CoeffTable table = expand(m, xmax, ymax, jobs);

    // Empirical ratios first: a vanishing coefficient is reported before any
    // geometry is attempted (the fate of models violating condition (III)).
    HornTable out;
    for (long k : sorted) {
        int x = checked_int(d.p * k, "coefficient index");
        int y = checked_int(d.q * k, "coefficient index");
        const Rational& f00 = table.at(x, y);
        const Rational& f10 = table.at(x + 1, y);
        const Rational& f01 = table.at(x, y + 1);
        if (sgn(f00) == 0 || sgn(f10) == 0 || sgn(f01) == 0)
            raise(Errc::zero_coefficient,
                  "zero coefficient near (" + std::to_string(x) + "," +
                      std::to_string(y) +
                      "); coefficient ratios do not converge along this "
                      "diagonal");
        HornRow row;
        row.k = k;
        row.ratio_z = f10 / f00;
        row.ratio_w = f01 / f00;
        out.rows.push_back(std::move(row));
    }

    auto [lz, lw] = horn_limit(m, build_fan(m), d.p, d.q);
    out.limit_z = lz;
    out.limit_w = lw;
    for (HornRow& row : out.rows) {
        Real ez = abs(to_real(row.ratio_z / out.limit_z) - 1);
        Real ew = abs(to_real(row.ratio_w / out.limit_w) - 1);
        row.error = std::max(ez.convert_to<double>(), ew.convert_to<double>());
    }
    return out;
}

bool dominance_check(const GFModel& m, const Fan& fan, const Int& p,
                     const Int& q) {
    Location loc = classify(fan, p, q);
    if (loc.kind != Location::Kind::interior) return false;

    ArgmaxResult res = argmax_oracle(m, p, q);
    if (res.tie()) return false;

    const Cone& cone = fan.cones[static_cast<size_t>(loc.cone)];
    const ArgmaxCandidate& best = res.best.front();
    if (cone.kind == Cone::Kind::saddle)
        return best.kind == ArgmaxCandidate::Kind::edge &&
               best.line_i == cone.line_i;
    return best.kind == ArgmaxCandidate::Kind::vertex &&
           best.line_i == cone.line_i && best.line_j == cone.line_j;
}

} // namespace ratdiag
