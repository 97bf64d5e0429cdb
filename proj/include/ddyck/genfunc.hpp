// Closed-form generating functions: V_d (counts by area/semilength), the
// helper V*_d, and T_d (total internal path length), plus the term table
// behind T_d's numerator so tests can corrupt single entries.
#pragma once

#include <array>
#include <vector>

#include "ddyck/polynomial.hpp"

namespace ddyck {

// V_d(x) = (1 - 2x + 2x^2 - x^{d+1}) / ((1-x)(1 - 2x + x^2 - x^{d+1})),
// coefficient n = number of d-Dyck paths of semilength n = number of
// d-restricted polyominoes of area n. d >= 0.
RationalGF v_gf(int d);

// V*_d(x) = (1-x) / (1 - 2x + x^2 - x^{d+1}); coefficient m counts the
// polyominoes whose every altitude gap (first included) is >= d, of area
// m+1. Satisfies V*_d = 1/(1-x) + x^{d+1}/(1-x)^2 * V*_d and
// V_d = 1/(1-x) + x^2/(1-x)^2 * V*_d.
RationalGF vstar_gf(int d);

// One numerator term (c2 d^2 + c1 d + c0) * x^{ed d + e0} of T_d's closed
// form; exponents collide for small d and simply accumulate.
struct FdTerm {
    long long c2, c1, c0;
    int ed, e0;
};

const std::array<FdTerm, 18>& fd_terms();

// T_d(x) = f_d(x) / g_d(x) with g_d = 2((x-1)^3 - (x-1)x^{d+1})^3;
// coefficient n = total internal path length summed over all d-restricted
// polyominoes of area n. d >= 0.
RationalGF t_gf(int d);

// Same, but with a caller-supplied term table (the mutation-test hook).
RationalGF t_gf_from_table(int d, const std::array<FdTerm, 18>& terms);

}  // namespace ddyck
