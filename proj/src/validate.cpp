#include "ratdiag/fan.hpp"
#include "ratdiag/model.hpp"

namespace ratdiag {

namespace {

// Restriction of P to the line a z + b w = 1, as a univariate coefficient
// vector. Identically zero iff the factor divides P.
std::vector<Rational> restrict_to_line(const Poly2& p, const LinearFactor& f) {
    int deg = std::max(p.total_degree(), 0);
    std::vector<Rational> acc(static_cast<size_t>(deg) + 1, Rational(0));
    if (sgn(f.b) != 0) {
        // z = t, w = (1 - a t) / b
        for (const auto& [k, d] : p.terms()) {
            unsigned long beta = static_cast<unsigned long>(k.second);
            Rational scale = d / pow_rational(f.b, beta);
            // (1 - a t)^beta
            for (unsigned long s = 0; s <= beta; ++s) {
                Rational c = scale * Rational(binomial(beta, s)) *
                             pow_rational(-f.a, s);
                acc[static_cast<size_t>(k.first) + s] += c;
            }
        }
    } else {
        // vertical line z = 1/a, restriction is a polynomial in w
        for (const auto& [k, d] : p.terms()) {
            Rational c = d / pow_rational(f.a, static_cast<unsigned long>(k.first));
            acc[static_cast<size_t>(k.second)] += c;
        }
    }
    return acc;
}

bool identically_zero(const std::vector<Rational>& coeffs) {
    for (const Rational& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

} // namespace

ValidationReport validate(const GFModel& m) {
    ValidationReport report;
    const int n = m.factor_count();

    report.cond1_linear = n >= 1;
    for (int i = 1; i <= n && report.cond1_linear; ++i) {
        const LinearFactor& f = m.factor(i);
        if (sgn(f.a) == 0 && sgn(f.b) == 0) report.cond1_linear = false;
    }

    for (int i = 1; i <= n; ++i) {
        const LinearFactor& f = m.factor(i);
        if (sgn(f.a) <= 0 || sgn(f.b) <= 0) report.nonpositive_factors.push_back(i);
    }
    report.cond3_positive = report.nonpositive_factors.empty();

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sgn(delta(m, i, j)) == 0) report.degenerate_pairs.push_back({i, j});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l)
                if (sgn(delta3(m, i, j, l)) == 0)
                    report.concurrent_triples.push_back({i, j, l});
    report.cond2_general_position =
        report.degenerate_pairs.empty() && report.concurrent_triples.empty();

    for (int i = 1; i <= n; ++i)
        if (identically_zero(restrict_to_line(m.numerator, m.factor(i))))
            report.dividing_factors.push_back(i);
    report.irreducible = report.dividing_factors.empty();

    // The vertex condition can only be certified once the polygon exists.
    if (report.cond1_linear && report.cond2_general_position &&
        report.cond3_positive) {
        Polygon poly = build_polygon(m);
        for (const Point2Q& v : poly.vertices)
            if (sgn(v.z) > 0 && sgn(v.w) > 0 &&
                sgn(m.numerator.eval(v.z, v.w)) == 0)
                report.vanishing_vertices.emplace_back(v.z, v.w);
        report.numerator_nonzero_at_vertices = report.vanishing_vertices.empty();
    }

    return report;
}

} // namespace ratdiag
