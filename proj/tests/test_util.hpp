#pragma once

#include <random>
#include <vector>

#include "ratdiag/model.hpp"

namespace ratdiag::testing {

// The asymmetric coin-toss model: 1 / ((1 - z/3 - 2w/3)(1 - 2z/3 - w/3)).
inline GFModel coin_model() {
    GFModel m;
    m.numerator = Poly2::constant(1);
    m.factors = {{Rational(1, 3), Rational(2, 3)},
                 {Rational(2, 3), Rational(1, 3)}};
    return m;
}

// Three lines, one of them inactive: 1 / ((1-z-w)(1-2z-w)(1-z-2w)).
inline GFModel three_lines_model() {
    GFModel m;
    m.numerator = Poly2::constant(1);
    m.factors = {{Rational(1), Rational(1)},
                 {Rational(2), Rational(1)},
                 {Rational(1), Rational(2)}};
    return m;
}

// A factor with a negative coefficient: 1 / ((1-z-w)(1+z-w)). Half of its
// coefficients vanish, so no diagonal has a nonzero limit law.
inline GFModel mixed_signs_model() {
    GFModel m;
    m.numerator = Poly2::constant(1);
    m.factors = {{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}};
    return m;
}

inline GFModel single_model(const Rational& a, const Rational& b) {
    GFModel m;
    m.numerator = Poly2::constant(1);
    m.factors = {{a, b}};
    return m;
}

// Random positive rational with small numerator/denominator.
inline Rational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 6), den(1, 6);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Random model satisfying conditions (I)-(III): positive coefficients,
// pairwise transversal, no concurrent triples. P = 1.
inline GFModel random_valid_model(std::mt19937& rng, int m) {
    for (;;) {
        GFModel model;
        model.numerator = Poly2::constant(1);
        for (int i = 0; i < m; ++i)
            model.factors.push_back({random_coeff(rng), random_coeff(rng)});
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i)
            for (int j = i + 1; j <= m && ok; ++j)
                if (sgn(delta(model, i, j)) == 0) ok = false;
        for (int i = 1; i <= m && ok; ++i)
            for (int j = i + 1; j <= m && ok; ++j)
                for (int l = j + 1; l <= m && ok; ++l)
                    if (sgn(delta3(model, i, j, l)) == 0) ok = false;
        if (ok) return model;
    }
}

// Random primitive strictly positive direction.
inline std::pair<long, long> random_direction(std::mt19937& rng, int maxc = 40) {
    std::uniform_int_distribution<long> c(1, maxc);
    long p = c(rng), q = c(rng);
    long g = std::gcd(p, q);
    return {p / g, q / g};
}

} // namespace ratdiag::testing
