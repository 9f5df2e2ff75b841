#pragma once

#include "ratdiag/fan.hpp"
#include "ratdiag/parfrac.hpp"
#include "ratdiag/series.hpp"

namespace ratdiag {

// Leading term of f(kp, kq):
//   f ~ C * k^(-1/2 if saddle) * P(base) / (base.z^(kp+1) * base.w^(kq+1)).
// The direction is stored in primitive form; k counts steps along it.
struct AsymptoticTerm {
    enum class Kind { saddle, vertex };

    Kind kind;
    int line_i = 0;           // saddle: the line; vertex: smaller-slope line
    int line_j = 0;           // vertex only
    Point2Q base;             // (z^, w^)
    Real constant{};          // C, signed
    bool has_sqrtk = false;   // true iff kind == saddle
    Rational numerator_value; // P(z^, w^)
    DirVector direction;
};

// Magnitude of one pair's saddle contribution for the line-i stationary
// point:
//   (1/sqrt(2*pi)) * sqrt(p/(p+q)) * | q / (p b_i (a_j-a_i) + q a_i (b_j-b_i)) |.
// The denominator vanishes exactly on the pair's cone boundary; throws
// Errc::degenerate_denominator there.
Real pair_saddle_constant(const GFModel& m, int i, int j, const Int& p,
                          const Int& q);

// Aggregated saddle constant sum_{j != i} A_ij * pair_saddle_constant, each
// pair entering with the sign of its decomposition constant. For m == 1 the
// closed form (1/(a b)) * sqrt(pq / (2*pi*(p+q)^3)) applies instead.
Real saddle_constant(const GFModel& m, const PairConstants& constants, int i,
                     const Int& p, const Int& q);

// A_ij / |delta_ij|; the sign comes from A_ij.
Real vertex_constant(const GFModel& m, const PairConstants& constants, int i,
                     int j);

// Classifies the direction and assembles the matching term. Throws
// Errc::boundary_direction on a boundary ray or axis direction and
// Errc::degenerate_numerator when P vanishes at the base point.
AsymptoticTerm main_term(const GFModel& m, const Fan& fan,
                         const PairConstants& constants, const Int& p,
                         const Int& q);

// Overflow-safe log evaluation of the term at step k:
//   ln|C| - (1/2) ln k [saddle only] + ln|P(base)|
//   - (kp+1) ln base.z - (kq+1) ln base.w.
SignedLog evaluate_log_term(const AsymptoticTerm& term, long k);

// (1/z^, 1/w^) for the term's base point: the limit of the forward
// coefficient ratios along the diagonal.
std::pair<Rational, Rational> horn_limit(const GFModel& m, const Fan& fan,
                                         const Int& p, const Int& q);

} // namespace ratdiag
