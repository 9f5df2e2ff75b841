#include "ratdiag/parfrac.hpp"

#include <algorithm>

#include "ratdiag/fan.hpp"

namespace ratdiag {

const Rational& PairConstants::at(int i, int j) const {
    auto it = entries_.find({std::min(i, j), std::max(i, j)});
    if (it == entries_.end())
        raise(Errc::internal, "missing pair constant {" + std::to_string(i) +
                                  "," + std::to_string(j) + "}");
    return it->second;
}

void PairConstants::set(int i, int j, Rational v) {
    entries_[{std::min(i, j), std::max(i, j)}] = std::move(v);
}

std::tuple<Rational, Rational, Rational> triple_constants(const GFModel& m,
                                                          int i, int j, int l) {
    // A_ij Q_l + A_jl Q_i + A_li Q_j == 1, matched on the 1, z, w coefficients:
    //   A_ij     + A_jl     + A_li     = 1
    //   A_ij a_l + A_jl a_i + A_li a_j = 0
    //   A_ij b_l + A_jl b_i + A_li b_j = 0
    // Cramer against det [[1,1,1],[a_l,a_i,a_j],[b_l,b_i,b_j]]: replacing a
    // column by (1,0,0) leaves the opposite pair's 2x2 determinant.
    Rational det = delta3(m, l, i, j);
    if (sgn(det) == 0)
        raise(Errc::concurrent_triple,
              "lines " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                  std::to_string(l) + " are not in general position");
    return {delta(m, i, j) / det, delta(m, j, l) / det, delta(m, l, i) / det};
}

namespace {

// The elimination the existence proof suggests: split the leading triple of
// every surviving index subset, multiply the branch constants through, and
// repeat until only pairs remain. Exponential in m if run naively, but the
// subset map deduplicates and m stays small.
std::map<std::pair<int, int>, Rational> decompose_recursive(const GFModel& m) {
    const int n = m.factor_count();
    std::map<std::vector<int>, Rational> work;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    work.emplace(std::move(all), Rational(1));

    std::map<std::pair<int, int>, Rational> out;
    while (!work.empty()) {
        auto it = work.begin();
        std::vector<int> subset = it->first;
        Rational c = it->second;
        work.erase(it);
        if (sgn(c) == 0) continue;
        if (subset.size() == 2) {
            out[{subset[0], subset[1]}] += c;
            continue;
        }
        int i = subset[0], j = subset[1], l = subset[2];
        auto [a_ij, a_jl, a_li] = triple_constants(m, i, j, l);
        auto push = [&](int victim, const Rational& mult) {
            std::vector<int> rest;
            rest.reserve(subset.size() - 1);
            for (int idx : subset)
                if (idx != victim) rest.push_back(idx);
            work[std::move(rest)] += c * mult;
        };
        push(l, a_ij);
        push(i, a_jl);
        push(j, a_li);
    }
    return out;
}

} // namespace

PairConstants decompose(const GFModel& m) {
    const int n = m.factor_count();
    if (n < 2)
        raise(Errc::invalid_model, "decomposition needs at least two factors");

    // Closed form: evaluate the remaining factors at the pair's common zero.
    PairConstants closed;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Point2Q v = intersect(m, i, j);
            Rational denom(1);
            for (int l = 1; l <= n; ++l) {
                if (l == i || l == j) continue;
                Rational ql = m.factor(l).eval(v.z, v.w);
                if (sgn(ql) == 0)
                    raise(Errc::concurrent_triple,
                          "line " + std::to_string(l) +
                              " passes through the intersection of lines " +
                              std::to_string(i) + ", " + std::to_string(j));
                denom *= ql;
            }
            closed.set(i, j, 1 / denom);
        }

    if (n > 2 && decompose_recursive(m) != closed.entries())
        raise(Errc::internal, "partial-fraction routes disagree");
    return closed;
}

bool verify_decomposition(const GFModel& m, const PairConstants& constants) {
    const int n = m.factor_count();
    Poly2 sum;
    for (const auto& [pair, a] : constants.entries()) {
        Poly2 prod = Poly2::constant(a);
        for (int l = 1; l <= n; ++l) {
            if (l == pair.first || l == pair.second) continue;
            prod = prod * m.factor(l).poly();
        }
        sum = sum + prod;
    }
    return sum == Poly2::constant(1);
}

} // namespace ratdiag
