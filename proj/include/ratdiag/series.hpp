#pragma once

#include <vector>

#include "ratdiag/model.hpp"
#include "ratdiag/real.hpp"

namespace ratdiag {

// Dense rectangle of exact Taylor coefficients f(x, y), 0 <= x <= xmax,
// 0 <= y <= ymax. This is the ground truth every asymptotic prediction is
// verified against.
class CoeffTable {
public:
    CoeffTable(int xmax, int ymax);

    int xmax() const { return xmax_; }
    int ymax() const { return ymax_; }
    const Rational& at(int x, int y) const;
    Rational& at(int x, int y);

    bool operator==(const CoeffTable& o) const = default;

private:
    int xmax_, ymax_;
    std::vector<Rational> values_;
};

// prod_i (1 - a_i z - b_i w), expanded. Constant term 1, total degree m.
Poly2 expanded_denominator(const GFModel& m);

// Coefficient recurrence from Q*F = P:
//   f(x,y) = P_{x,y} - sum_{(s,t) != (0,0)} q_{s,t} f(x-s, y-t).
// jobs > 1 parallelizes across anti-diagonals (entries on one anti-diagonal
// only depend on earlier ones).
CoeffTable expand(const GFModel& m, int xmax, int ymax, int jobs = 1);

// Single coefficient; builds the (x+1) x (y+1) rectangle internally.
Rational coeff(const GFModel& m, int x, int y);

// Independent cross-check: each factor alone expands in closed form as
// C(x+y, x) a^x b^y; the full table is the truncated 2-D convolution of
// those, followed by the numerator shift
//   f(x,y) = sum_{(dz,dw)} d_{dz,dw} g(x-dz, y-dw).
// Must equal expand() entrywise.
CoeffTable convolve_singles(const GFModel& m, int xmax, int ymax);

// Sign and natural log of |r|, computed without ever materializing r as a
// float. Relative error stays below 1e-12 regardless of the bit length of
// numerator and denominator (the near-1 case goes through log1p on the
// exact difference, everything else through two big-integer logs).
// For r == 0 the sign is 0 and log_abs is -infinity.
struct SignedLog {
    int sign = 0;
    Real log_abs{};
};

SignedLog log_value(const Rational& r);

} // namespace ratdiag
