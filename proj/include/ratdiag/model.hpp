#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratdiag/rational.hpp"

namespace ratdiag {

// Bivariate polynomial with exact rational coefficients, sparse storage.
// No zero coefficients are kept; exponents are nonnegative.
class Poly2 {
public:
    using Key = std::pair<int, int>; // (z exponent, w exponent)

    Poly2() = default;

    static Poly2 constant(const Rational& c);
    static Poly2 monomial(int dz, int dw, const Rational& c);

    // Accumulates c into the (dz, dw) term, dropping it if the sum is zero.
    void add_term(int dz, int dw, const Rational& c);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int dz, int dw) const;
    int total_degree() const; // -1 for the zero polynomial

    Rational eval(const Rational& z, const Rational& w) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 scaled(const Rational& c) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    std::string to_string() const; // "1 - z - w + 2/9*z^2" style, sorted

private:
    std::map<Key, Rational> terms_;
};

// One linear denominator factor Q_i = 1 - a*z - b*w. (a, b) != (0, 0).
struct LinearFactor {
    Rational a;
    Rational b;

    Rational eval(const Rational& z, const Rational& w) const;
    Poly2 poly() const;
};

// F(z, w) = numerator / prod(factors). Factor indices in the public API are
// 1-based, matching the CLI output and file order.
struct GFModel {
    Poly2 numerator;
    std::vector<LinearFactor> factors;

    int factor_count() const { return static_cast<int>(factors.size()); }
    const LinearFactor& factor(int i) const; // 1-based, bounds-checked
};

// Input format (JSON):
//   {
//     "numerator": [ {"z": 0, "w": 0, "coeff": "1"}, ... ],   // optional, default 1
//     "factors":   [ {"a": "1/3", "b": "2/3"}, ... ]
//   }
// Rationals are strings "num" or "num/den". Unknown keys are rejected.
GFModel parse_model(const std::string& text);
GFModel load_model(const std::string& path);

// a_i*b_j - a_j*b_i. Zero iff the singular lines i and j are parallel.
Rational delta(const GFModel& m, int i, int j);

// det [[1,1,1],[a_i,a_j,a_l],[b_i,b_j,b_l]]. Zero iff the three lines meet
// in a common point (or two of them are parallel).
Rational delta3(const GFModel& m, int i, int j, int l);

// Validation findings. A report with every flag set certifies the
// hypotheses of the main asymptotic statement; nothing is mutated or
// rejected here, the CLI decides whether to proceed.
struct ValidationReport {
    bool cond1_linear = false; // factors present, none identically 1
    bool cond2_general_position = false;
    std::vector<std::pair<int, int>> degenerate_pairs;    // delta == 0
    std::vector<std::array<int, 3>> concurrent_triples;   // delta3 == 0
    bool cond3_positive = false;
    std::vector<int> nonpositive_factors;
    bool irreducible = false;
    std::vector<int> dividing_factors; // Q_i divides P
    bool numerator_nonzero_at_vertices = false;
    std::vector<std::pair<Rational, Rational>> vanishing_vertices;

    bool all_pass() const {
        return cond1_linear && cond2_general_position && cond3_positive &&
               irreducible && numerator_nonzero_at_vertices;
    }
};

ValidationReport validate(const GFModel& m);

} // namespace ratdiag
