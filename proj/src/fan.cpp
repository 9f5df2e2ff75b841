#include "ratdiag/fan.hpp"

#include <algorithm>

#include "ratdiag/series.hpp"

namespace ratdiag {

std::vector<int> Polygon::active_by_slope() const {
    return {edge_lines.rbegin(), edge_lines.rend()};
}

std::vector<Point2Q> Polygon::chain() const {
    return {vertices.rbegin(), vertices.rend() - 1};
}

DirVector make_dir(const Rational& p, const Rational& q) {
    if (sgn(p) < 0 || sgn(q) < 0)
        raise(Errc::internal, "direction with a negative component");
    if (sgn(p) == 0 && sgn(q) == 0)
        raise(Errc::zero_direction, "zero direction vector");
    Int l = lcm(p.get_den(), q.get_den());
    Int ip = p.get_num() * (l / p.get_den());
    Int iq = q.get_num() * (l / q.get_den());
    Int g = gcd(ip, iq);
    return DirVector{ip / g, iq / g};
}

Int cross(const DirVector& u, const DirVector& v) {
    return u.p * v.q - u.q * v.p;
}

Point2Q intersect(const GFModel& m, int i, int j) {
    Rational d = delta(m, i, j);
    if (sgn(d) == 0)
        raise(Errc::parallel_lines, "lines " + std::to_string(i) + " and " +
                                        std::to_string(j) + " do not intersect");
    const LinearFactor& fi = m.factor(i);
    const LinearFactor& fj = m.factor(j);
    return Point2Q{(fj.b - fi.b) / d, (fi.a - fj.a) / d};
}

namespace {

// a/b strictly, both positive here.
Rational slope(const LinearFactor& f) { return f.a / f.b; }

} // namespace

Polygon build_polygon(const GFModel& m) {
    const int n = m.factor_count();
    for (int i = 1; i <= n; ++i) {
        const LinearFactor& f = m.factor(i);
        if (sgn(f.a) <= 0 || sgn(f.b) <= 0)
            raise(Errc::invalid_model,
                  "polygon requires positive coefficients; factor " +
                      std::to_string(i) + " violates condition (III)");
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sgn(delta(m, i, j)) == 0)
                raise(Errc::invalid_model,
                      "polygon requires pairwise transversal lines; factors " +
                          std::to_string(i) + ", " + std::to_string(j) +
                          " are parallel");

    // Walk the lower envelope of the lines from the w-axis. The binding line
    // at z = 0+ has the lowest w-intercept 1/b; among equals, the steepest.
    int cur = 1;
    for (int i = 2; i <= n; ++i) {
        const LinearFactor& fi = m.factor(i);
        const LinearFactor& fc = m.factor(cur);
        if (fi.b > fc.b || (fi.b == fc.b && slope(fi) > slope(fc))) cur = i;
    }

    std::vector<int> walk{cur};
    std::vector<Point2Q> chain{Point2Q{Rational(0), Rational(1) / m.factor(cur).b}};
    for (;;) {
        const Rational cur_z = chain.back().z;
        int next = 0;
        Point2Q next_pt;
        for (int l = 1; l <= n; ++l) {
            if (slope(m.factor(l)) <= slope(m.factor(cur))) continue;
            Point2Q v = intersect(m, cur, l);
            if (v.z <= cur_z || sgn(v.w) <= 0) continue;
            if (next == 0 || v.z < next_pt.z ||
                (v.z == next_pt.z && slope(m.factor(l)) > slope(m.factor(next)))) {
                next = l;
                next_pt = v;
            }
        }
        if (next == 0) break;
        walk.push_back(next);
        chain.push_back(next_pt);
        cur = next;
    }
    chain.push_back(Point2Q{Rational(1) / m.factor(cur).a, Rational(0)});

    Polygon poly;
    poly.vertices.push_back(Point2Q{Rational(0), Rational(0)});
    poly.vertices.insert(poly.vertices.end(), chain.rbegin(), chain.rend());
    poly.edge_lines.assign(walk.rbegin(), walk.rend());
    return poly;
}

DirVector eta(const GFModel& m, int i, const Point2Q& vertex) {
    const LinearFactor& f = m.factor(i);
    if (f.a * vertex.z + f.b * vertex.w != 1)
        raise(Errc::vertex_not_on_line,
              "point (" + to_string(vertex.z) + ", " + to_string(vertex.w) +
                  ") is not on line " + std::to_string(i));
    return make_dir(f.a * vertex.z, f.b * vertex.w);
}

Fan build_fan(const GFModel& m) { return build_fan(m, build_polygon(m)); }

Fan build_fan(const GFModel& m, const Polygon& poly) {
    const std::vector<int> actives = poly.active_by_slope();
    const std::vector<Point2Q> chain = poly.chain();
    const int r = static_cast<int>(actives.size());

    Fan fan;
    for (int t = 0; t < r; ++t) {
        int line = actives[static_cast<size_t>(t)];
        Cone k;
        k.kind = Cone::Kind::saddle;
        k.line_i = line;
        k.gen[0] = eta(m, line, chain[static_cast<size_t>(t)]);
        k.gen[1] = eta(m, line, chain[static_cast<size_t>(t) + 1]);
        k.base = chain[static_cast<size_t>(t)];
        fan.cones.push_back(std::move(k));

        if (t + 1 < r) {
            int nxt = actives[static_cast<size_t>(t) + 1];
            Cone omega;
            omega.kind = Cone::Kind::vertex;
            omega.line_i = std::min(line, nxt);
            omega.line_j = std::max(line, nxt);
            omega.gen[0] = fan.cones.back().gen[1];
            omega.gen[1] = eta(m, nxt, chain[static_cast<size_t>(t) + 1]);
            omega.base = chain[static_cast<size_t>(t) + 1];
            fan.cones.push_back(std::move(omega));
        }
    }

    // Generators must rotate strictly clockwise from (0,1) to (1,0).
    for (const Cone& c : fan.cones)
        if (sgn(cross(c.gen[0], c.gen[1])) >= 0)
            raise(Errc::internal, "degenerate cone in fan construction");
    return fan;
}

Location classify(const Fan& fan, const Int& p, const Int& q) {
    if (sgn(p) < 0 || sgn(q) < 0)
        raise(Errc::zero_direction, "direction components must be nonnegative");
    if (sgn(p) == 0 && sgn(q) == 0)
        raise(Errc::zero_direction, "zero direction");
    if (sgn(p) == 0 || sgn(q) == 0) return Location{Location::Kind::on_axis};

    Int g = gcd(p, q);
    DirVector d{p / g, q / g};
    for (int idx = 0; idx < static_cast<int>(fan.cones.size()); ++idx) {
        const Cone& c = fan.cones[static_cast<size_t>(idx)];
        int s1 = sgn(cross(c.gen[0], d));
        int s2 = sgn(cross(c.gen[1], d));
        if (s1 < 0 && s2 > 0) return Location{Location::Kind::interior, idx};
        if (s2 == 0) return Location{Location::Kind::boundary_ray, idx, idx + 1};
    }
    raise(Errc::internal, "direction not covered by the fan");
}

Point2Q saddle_point(const GFModel& m, int i, const Int& p, const Int& q) {
    if (sgn(p) + sgn(q) <= 0 || sgn(p) < 0 || sgn(q) < 0)
        raise(Errc::zero_direction, "saddle point needs p, q >= 0, p + q > 0");
    const LinearFactor& f = m.factor(i);
    if (sgn(f.a) == 0 || sgn(f.b) == 0)
        raise(Errc::invalid_model, "saddle point undefined for axis-parallel line");
    Rational sum{p + q};
    return Point2Q{Rational(p) / (f.a * sum), Rational(q) / (f.b * sum)};
}

namespace {

unsigned long to_ulong_exp(const Int& n) {
    if (!n.fits_ulong_p())
        raise(Errc::internal, "direction exponent too large for exact fallback");
    return n.get_ui();
}

// z^p w^q, exact.
Rational power_value(const Point2Q& pt, const Int& p, const Int& q) {
    return pow_rational(pt.z, to_ulong_exp(p)) * pow_rational(pt.w, to_ulong_exp(q));
}

// -1 / 0 / +1 comparison of the objective p ln z + q ln w at two points,
// exact whenever the extended-precision margin is below 1e-9.
int compare_objective(const Point2Q& a, const Point2Q& b, const Int& p,
                      const Int& q, const Real& obj_a, const Real& obj_b) {
    Real diff = obj_a - obj_b;
    if (abs(diff) > 1e-9) return diff > 0 ? 1 : -1;
    Rational va = power_value(a, p, q);
    Rational vb = power_value(b, p, q);
    return cmp(va, vb);
}

Real objective(const Point2Q& pt, const Int& p, const Int& q) {
    return to_real(p) * log_value(pt.z).log_abs +
           to_real(q) * log_value(pt.w).log_abs;
}

} // namespace

ArgmaxResult argmax_oracle(const GFModel& m, const Int& p, const Int& q) {
    return argmax_oracle(m, build_polygon(m), p, q);
}

ArgmaxResult argmax_oracle(const GFModel& m, const Polygon& poly, const Int& p,
                           const Int& q) {
    if (sgn(p) <= 0 || sgn(q) <= 0)
        raise(Errc::zero_direction, "argmax needs a strictly positive direction");

    const std::vector<int> actives = poly.active_by_slope();
    const std::vector<Point2Q> chain = poly.chain();
    const int r = static_cast<int>(actives.size());

    std::vector<ArgmaxCandidate> cands;
    // Off-axis polygon vertices (the objective is -inf on the axes).
    for (int t = 1; t < r; ++t) {
        const Point2Q& v = chain[static_cast<size_t>(t)];
        if (sgn(v.z) > 0 && sgn(v.w) > 0) {
            int i = actives[static_cast<size_t>(t) - 1];
            int j = actives[static_cast<size_t>(t)];
            cands.push_back({ArgmaxCandidate::Kind::vertex, std::min(i, j),
                             std::max(i, j), v});
        }
    }
    // Edge tangency points, kept when on the closed edge segment (z grows
    // monotonically along the chain).
    for (int t = 0; t < r; ++t) {
        int line = actives[static_cast<size_t>(t)];
        Point2Q s = saddle_point(m, line, p, q);
        if (s.z >= chain[static_cast<size_t>(t)].z &&
            s.z <= chain[static_cast<size_t>(t) + 1].z)
            cands.push_back({ArgmaxCandidate::Kind::edge, line, 0, s});
    }
    if (cands.empty())
        raise(Errc::internal, "argmax oracle found no candidates");

    std::vector<Real> objs;
    objs.reserve(cands.size());
    for (const ArgmaxCandidate& c : cands) objs.push_back(objective(c.point, p, q));

    ArgmaxResult result;
    result.best.push_back(cands.front());
    Real best_obj = objs.front();
    size_t best_idx = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
        int c = compare_objective(cands[i].point, cands[best_idx].point, p, q,
                                  objs[i], best_obj);
        if (c > 0) {
            result.best.assign(1, cands[i]);
            best_obj = objs[i];
            best_idx = i;
        } else if (c == 0) {
            result.best.push_back(cands[i]);
        }
    }
    return result;
}

} // namespace ratdiag
