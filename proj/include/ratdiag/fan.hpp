#pragma once

#include <vector>

#include "ratdiag/model.hpp"

namespace ratdiag {

struct Point2Q {
    Rational z;
    Rational w;

    bool operator==(const Point2Q& o) const = default;
};

// The region M = { z, w > 0, all Q_i > 0 }. Vertices trace the boundary
// starting at (0,0), then along the z-axis, then the concave chain, ending
// at the w-axis intercept. edge_lines[k] is the 1-based factor index of the
// k-th non-axis edge in that traversal order (so the line slopes a/b
// decrease along it; lines that contribute no edge are absent).
struct Polygon {
    std::vector<Point2Q> vertices;
    std::vector<int> edge_lines;

    // Lines that carry an edge, ordered by increasing slope a/b, i.e. from
    // the w-axis edge towards the z-axis edge.
    std::vector<int> active_by_slope() const;
    // Chain vertices from the w-axis intercept to the z-axis intercept;
    // chain()[t-1], chain()[t] are the endpoints of active_by_slope()[t-1]'s
    // edge.
    std::vector<Point2Q> chain() const;
};

// Primitive lattice direction: p, q >= 0 coprime, not both zero.
struct DirVector {
    Int p;
    Int q;

    bool operator==(const DirVector& o) const = default;
};

// Reduces a rational direction to primitive integer form.
DirVector make_dir(const Rational& p, const Rational& q);

// u.p*v.q - u.q*v.p.
Int cross(const DirVector& u, const DirVector& v);

// A cone of directions, swept clockwise (from the q-axis towards the
// z-axis): gen[0] is the counterclockwise-most generator. Saddle cones own
// one boundary line; vertex cones own an adjacent active pair. base is the
// polygon vertex the saddle parametrization starts from (the edge endpoint
// reached at gen[0]); for a vertex cone it is the pair's intersection.
struct Cone {
    enum class Kind { saddle, vertex };

    Kind kind;
    int line_i = 0;            // saddle: the line; vertex: smaller-slope line
    int line_j = 0;            // vertex only: larger-slope line
    DirVector gen[2];
    Point2Q base;
};

// Complete fan of the positive quadrant: saddle and vertex cones alternate,
// consecutive cones share exactly one generator ray, the first generator is
// (0,1) and the last is (1,0).
struct Fan {
    std::vector<Cone> cones;
};

// Solution of Q_i = Q_j = 0. Throws Errc::parallel_lines when delta==0.
Point2Q intersect(const GFModel& m, int i, int j);

// Exact half-plane intersection. Requires conditions (II) and (III); throws
// Errc::invalid_model otherwise.
Polygon build_polygon(const GFModel& m);

// Primitive direction (a_i z*, b_i w*) for a vertex on line i. Axis
// endpoints give (1,0) / (0,1). Throws Errc::vertex_not_on_line.
DirVector eta(const GFModel& m, int i, const Point2Q& vertex);

Fan build_fan(const GFModel& m);
Fan build_fan(const GFModel& m, const Polygon& poly);

// Where a direction sits in the fan.
struct Location {
    enum class Kind { interior, boundary_ray, on_axis };

    Kind kind;
    int cone = -1;   // interior: the cone; boundary_ray: the ccw-side cone
    int cone2 = -1;  // boundary_ray: the cw-side cone
};

// Exact classification by cross-product signs. Throws Errc::zero_direction
// for (0,0).
Location classify(const Fan& fan, const Int& p, const Int& q);

// (p/(a_i(p+q)), q/(b_i(p+q))): the point of line i where z^p w^q is
// stationary. Always lies on the line.
Point2Q saddle_point(const GFModel& m, int i, const Int& p, const Int& q);

// Independent maximizer oracle for z^p w^q over the closure of M.
// Candidates are the off-axis polygon vertices and, per edge, the saddle
// point when it lies on the closed edge segment. Comparison is done in
// extended precision with an exact rational-power fallback whenever the
// margin drops below 1e-9, so reported ties are exact.
struct ArgmaxCandidate {
    enum class Kind { edge, vertex };

    Kind kind;
    int line_i = 0; // edge: the line; vertex: smaller-slope line of the pair
    int line_j = 0; // vertex only
    Point2Q point;
};

struct ArgmaxResult {
    std::vector<ArgmaxCandidate> best; // > 1 entry means an exact tie

    bool tie() const { return best.size() > 1; }
    const Point2Q& point() const { return best.front().point; }
};

ArgmaxResult argmax_oracle(const GFModel& m, const Int& p, const Int& q);
ArgmaxResult argmax_oracle(const GFModel& m, const Polygon& poly,
                           const Int& p, const Int& q);

} // namespace ratdiag
