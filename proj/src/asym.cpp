#include "ratdiag/asym.hpp"

namespace ratdiag {

namespace {

const Real& inv_sqrt_2pi() {
    static const Real v = 1 / sqrt(2 * pi_real());
    return v;
}

DirVector primitive(const Int& p, const Int& q) {
    if (sgn(p) < 0 || sgn(q) < 0)
        raise(Errc::zero_direction, "direction components must be nonnegative");
    if (sgn(p) == 0 && sgn(q) == 0)
        raise(Errc::zero_direction, "zero direction");
    if (sgn(p) == 0 || sgn(q) == 0)
        raise(Errc::boundary_direction,
              "axis directions are excluded from the asymptotic statement");
    Int g = gcd(p, q);
    return DirVector{p / g, q / g};
}

} // namespace

Real pair_saddle_constant(const GFModel& m, int i, int j, const Int& p,
                          const Int& q) {
    if (i == j) raise(Errc::internal, "pair constant needs two distinct lines");
    if (sgn(p) <= 0 || sgn(q) <= 0)
        raise(Errc::zero_direction, "pair constant needs p, q > 0");
    const LinearFactor& fi = m.factor(i);
    const LinearFactor& fj = m.factor(j);
    Rational denom =
        Rational(p) * fi.b * (fj.a - fi.a) + Rational(q) * fi.a * (fj.b - fi.b);
    if (sgn(denom) == 0)
        raise(Errc::degenerate_denominator,
              "pair (" + std::to_string(i) + "," + std::to_string(j) +
                  ") is degenerate along this direction (cone boundary)");
    // (1/sqrt(2 pi)) sqrt(pq/(p+q)) / |D|, from partial fractions in w plus
    // Stirling on the remaining binomial sum: the Cauchy kernel 1/(z - z_ij)
    // sums to 1/(z_ij - z_i) against the geometric tail, and
    // b_i z_i w_i / |delta (z_ij - z_i)| collapses to 1/|D|. The constant
    // scales as 1/sqrt(2) under (p,q) -> (2p,2q), as the k-subsequence
    // identity requires.
    return inv_sqrt_2pi() *
           sqrt(to_real(Rational(p * q) / Rational(p + q))) *
           to_real(abs(1 / denom));
}

Real saddle_constant(const GFModel& m, const PairConstants& constants, int i,
                     const Int& p, const Int& q) {
    if (m.factor_count() == 1) {
        // Single-line closed form (equivalent to Stirling on the binomial
        // series): (1/(a b)) sqrt(pq / (2 pi (p+q)^3)).
        const LinearFactor& f = m.factor(1);
        Rational inside = Rational(p * q) / (2 * pow_rational(Rational(p + q), 3));
        return to_real(1 / (f.a * f.b)) * sqrt(to_real(inside) / pi_real());
    }
    Real acc = 0;
    for (int j = 1; j <= m.factor_count(); ++j) {
        if (j == i) continue;
        acc += to_real(constants.at(i, j)) * pair_saddle_constant(m, i, j, p, q);
    }
    return acc;
}

Real vertex_constant(const GFModel& m, const PairConstants& constants, int i,
                     int j) {
    return to_real(constants.at(i, j) / abs(delta(m, i, j)));
}

AsymptoticTerm main_term(const GFModel& m, const Fan& fan,
                         const PairConstants& constants, const Int& p,
                         const Int& q) {
    DirVector d = primitive(p, q);
    Location loc = classify(fan, d.p, d.q);
    if (loc.kind != Location::Kind::interior)
        raise(Errc::boundary_direction,
              "direction (" + d.p.get_str() + "," + d.q.get_str() +
                  ") lies on a boundary ray between two cones");

    const Cone& cone = fan.cones[static_cast<size_t>(loc.cone)];
    AsymptoticTerm term;
    term.direction = d;
    if (cone.kind == Cone::Kind::saddle) {
        term.kind = AsymptoticTerm::Kind::saddle;
        term.line_i = cone.line_i;
        term.base = saddle_point(m, cone.line_i, d.p, d.q);
        term.constant = saddle_constant(m, constants, cone.line_i, d.p, d.q);
        term.has_sqrtk = true;
        if (term.constant == 0)
            raise(Errc::internal,
                  "aggregated saddle constant vanishes for an interior "
                  "direction; configuration is degenerate");
    } else {
        term.kind = AsymptoticTerm::Kind::vertex;
        term.line_i = cone.line_i;
        term.line_j = cone.line_j;
        term.base = cone.base;
        term.constant = vertex_constant(m, constants, cone.line_i, cone.line_j);
        term.has_sqrtk = false;
    }
    term.numerator_value = m.numerator.eval(term.base.z, term.base.w);
    if (sgn(term.numerator_value) == 0)
        raise(Errc::degenerate_numerator,
              "numerator vanishes at the base point; the leading term is "
              "degenerate along this direction");
    return term;
}

SignedLog evaluate_log_term(const AsymptoticTerm& term, long k) {
    if (k < 1) raise(Errc::internal, "evaluation needs k >= 1");
    SignedLog out;
    int csign = term.constant == 0 ? 0 : (term.constant < 0 ? -1 : 1);
    out.sign = csign * sgn(term.numerator_value);

    Real v = log(abs(term.constant));
    if (term.has_sqrtk) v -= log(Real(k)) / 2;
    v += log_value(term.numerator_value).log_abs;
    Int ez = term.direction.p * k + 1;
    Int ew = term.direction.q * k + 1;
    v -= to_real(ez) * log_value(term.base.z).log_abs;
    v -= to_real(ew) * log_value(term.base.w).log_abs;
    out.log_abs = v;
    return out;
}

std::pair<Rational, Rational> horn_limit(const GFModel& m, const Fan& fan,
                                         const Int& p, const Int& q) {
    DirVector d = primitive(p, q);
    Location loc = classify(fan, d.p, d.q);
    if (loc.kind != Location::Kind::interior)
        raise(Errc::boundary_direction,
              "coefficient-ratio limit is undefined on boundary rays");
    const Cone& cone = fan.cones[static_cast<size_t>(loc.cone)];
    Point2Q base = cone.kind == Cone::Kind::saddle
                       ? saddle_point(m, cone.line_i, d.p, d.q)
                       : cone.base;
    return {1 / base.z, 1 / base.w};
}

} // namespace ratdiag
