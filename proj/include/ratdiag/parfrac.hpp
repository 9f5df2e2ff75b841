#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "ratdiag/model.hpp"

namespace ratdiag {

// Constants A_ij of the decomposition 1/prod Q_i = sum_{i<j} A_ij/(Q_i Q_j)
// (defined for m >= 2, keyed by the unordered pair with i < j).
class PairConstants {
public:
    const Rational& at(int i, int j) const; // order-insensitive
    void set(int i, int j, Rational v);
    const std::map<std::pair<int, int>, Rational>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<int, int>, Rational> entries_;
};

// Unique (A_ij, A_jl, A_li) with A_ij Q_l + A_jl Q_i + A_li Q_j == 1.
// Throws Errc::concurrent_triple when delta3(i,j,l) == 0.
std::tuple<Rational, Rational, Rational> triple_constants(const GFModel& m,
                                                          int i, int j, int l);

// All pair constants, computed two independent ways that must agree
// exactly: recursive elimination through triple_constants, and the closed
// form A_ij = 1 / prod_{l not in {i,j}} Q_l(z_ij, w_ij). Requires m >= 2
// and general position.
PairConstants decompose(const GFModel& m);

// Exact polynomial identity check:
//   sum_{i<j} A_ij prod_{l not in {i,j}} Q_l == 1.
bool verify_decomposition(const GFModel& m, const PairConstants& constants);

} // namespace ratdiag
