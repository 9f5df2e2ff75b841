#include "ratdiag/series.hpp"

#include <boost/math/special_functions/log1p.hpp>

#include <future>
#include <limits>

namespace ratdiag {

CoeffTable::CoeffTable(int xmax, int ymax)
    : xmax_(xmax), ymax_(ymax),
      values_(static_cast<size_t>(xmax + 1) * static_cast<size_t>(ymax + 1)) {
    if (xmax < 0 || ymax < 0)
        raise(Errc::internal, "negative coefficient-table extent");
}

const Rational& CoeffTable::at(int x, int y) const {
    if (x < 0 || x > xmax_ || y < 0 || y > ymax_)
        raise(Errc::internal, "coefficient index out of range");
    return values_[static_cast<size_t>(x) * (ymax_ + 1) + y];
}

Rational& CoeffTable::at(int x, int y) {
    return const_cast<Rational&>(static_cast<const CoeffTable&>(*this).at(x, y));
}

Poly2 expanded_denominator(const GFModel& m) {
    Poly2 q = Poly2::constant(1);
    for (const LinearFactor& f : m.factors) q = q * f.poly();
    return q;
}

namespace {

struct DenomTerm {
    int s, t;
    Rational q;
};

// Nonconstant terms of the expanded denominator.
std::vector<DenomTerm> denominator_terms(const GFModel& m) {
    std::vector<DenomTerm> terms;
    const Poly2 q = expanded_denominator(m);
    for (const auto& [k, c] : q.terms())
        if (k.first != 0 || k.second != 0)
            terms.push_back({k.first, k.second, c});
    return terms;
}

void fill_cell(CoeffTable& table, const Poly2& numerator,
               const std::vector<DenomTerm>& q, int x, int y) {
    Rational v = numerator.coeff(x, y);
    for (const DenomTerm& term : q)
        if (term.s <= x && term.t <= y)
            v -= term.q * table.at(x - term.s, y - term.t);
    table.at(x, y) = std::move(v);
}

} // namespace

CoeffTable expand(const GFModel& m, int xmax, int ymax, int jobs) {
    CoeffTable table(xmax, ymax);
    const std::vector<DenomTerm> q = denominator_terms(m);

    if (jobs <= 1) {
        for (int x = 0; x <= xmax; ++x)
            for (int y = 0; y <= ymax; ++y)
                fill_cell(table, m.numerator, q, x, y);
        return table;
    }

    // Wavefront: every entry on anti-diagonal d = x + y depends only on
    // strictly earlier anti-diagonals, so one diagonal splits across jobs.
    for (int d = 0; d <= xmax + ymax; ++d) {
        int xlo = std::max(0, d - ymax);
        int xhi = std::min(xmax, d);
        int n = xhi - xlo + 1;
        int workers = std::min(jobs, n);
        std::vector<std::future<void>> pending;
        for (int wrk = 1; wrk < workers; ++wrk) {
            int lo = xlo + static_cast<int>(static_cast<long>(n) * wrk / workers);
            int hi = xlo + static_cast<int>(static_cast<long>(n) * (wrk + 1) / workers) - 1;
            pending.push_back(std::async(std::launch::async, [&, lo, hi, d] {
                for (int x = lo; x <= hi; ++x)
                    fill_cell(table, m.numerator, q, x, d - x);
            }));
        }
        int hi0 = xlo + static_cast<int>(static_cast<long>(n) / workers) - 1;
        for (int x = xlo; x <= hi0; ++x) fill_cell(table, m.numerator, q, x, d - x);
        for (auto& f : pending) f.get();
    }
    return table;
}

Rational coeff(const GFModel& m, int x, int y) {
    if (x < 0 || y < 0)
        raise(Errc::internal, "negative coefficient index");
    return expand(m, x, y).at(x, y);
}

namespace {

// Closed form for one factor: g(x, y) = C(x+y, x) a^x b^y.
CoeffTable single_factor_table(const LinearFactor& f, int xmax, int ymax) {
    CoeffTable g(xmax, ymax);
    std::vector<Rational> apow(xmax + 1), bpow(ymax + 1);
    apow[0] = 1;
    for (int x = 1; x <= xmax; ++x) apow[x] = apow[x - 1] * f.a;
    bpow[0] = 1;
    for (int y = 1; y <= ymax; ++y) bpow[y] = bpow[y - 1] * f.b;
    for (int x = 0; x <= xmax; ++x)
        for (int y = 0; y <= ymax; ++y) {
            Rational v(binomial(static_cast<unsigned long>(x + y),
                                static_cast<unsigned long>(x)));
            v *= apow[x];
            v *= bpow[y];
            g.at(x, y) = std::move(v);
        }
    return g;
}

CoeffTable convolve(const CoeffTable& u, const CoeffTable& v) {
    CoeffTable h(u.xmax(), u.ymax());
    for (int x = 0; x <= h.xmax(); ++x)
        for (int y = 0; y <= h.ymax(); ++y) {
            Rational acc(0);
            for (int s = 0; s <= x; ++s)
                for (int t = 0; t <= y; ++t)
                    acc += u.at(s, t) * v.at(x - s, y - t);
            h.at(x, y) = std::move(acc);
        }
    return h;
}

} // namespace

CoeffTable convolve_singles(const GFModel& m, int xmax, int ymax) {
    CoeffTable g = single_factor_table(m.factors.front(), xmax, ymax);
    for (size_t i = 1; i < m.factors.size(); ++i)
        g = convolve(g, single_factor_table(m.factors[i], xmax, ymax));

    if (m.numerator == Poly2::constant(1)) return g;

    CoeffTable out(xmax, ymax);
    for (int x = 0; x <= xmax; ++x)
        for (int y = 0; y <= ymax; ++y) {
            Rational acc(0);
            for (const auto& [k, d] : m.numerator.terms())
                if (k.first <= x && k.second <= y)
                    acc += d * g.at(x - k.first, y - k.second);
            out.at(x, y) = std::move(acc);
        }
    return out;
}

SignedLog log_value(const Rational& r) {
    SignedLog out;
    out.sign = sgn(r);
    if (out.sign == 0) {
        out.log_abs = -std::numeric_limits<Real>::infinity();
        return out;
    }
    Int num = abs(Int(r.get_num()));
    const Int& den = r.get_den();
    Int diff = num - den;
    if (2 * abs(diff) <= den) {
        // |r| in [1/2, 3/2]: log1p on the exact offset avoids cancellation
        out.log_abs = boost::math::log1p(to_real(diff) / to_real(den));
    } else {
        out.log_abs = log(to_real(num)) - log(to_real(den));
    }
    return out;
}

} // namespace ratdiag
