#include "ddyck/genfunc.hpp"

namespace ddyck {

namespace {

IntPolynomial one_minus_x() { return IntPolynomial{1, -1}; }

// 1 - 2x + x^2 - x^{d+1}, the recurring kernel (1-x)^2 - x^{d+1}
IntPolynomial kernel(int d) {
    return IntPolynomial{1, -2, 1} - IntPolynomial::monomial(1, d + 1);
}

}  // namespace

RationalGF v_gf(int d) {
    if (d < 0) throw Error(ErrorCode::UnsupportedD, "generating functions require d >= 0");
    IntPolynomial num = IntPolynomial{1, -2, 2} - IntPolynomial::monomial(1, d + 1);
    return RationalGF(num, one_minus_x() * kernel(d));
}

RationalGF vstar_gf(int d) {
    if (d < 0) throw Error(ErrorCode::UnsupportedD, "generating functions require d >= 0");
    return RationalGF(one_minus_x(), kernel(d));
}

const std::array<FdTerm, 18>& fd_terms() {
    // Numerator of T_d, collected as (c2 d^2 + c1 d + c0) x^{ed d + e0}.
    static const std::array<FdTerm, 18> terms = {{
        {-1, -7, -18, 1, 3},   // -(d^2+7d+18) x^{d+3}
        {4, 20, 26, 1, 4},     // +2(2d^2+10d+13) x^{d+4}
        {-6, -18, -22, 1, 5},  // -2(3d^2+9d+11) x^{d+5}
        {4, 4, 8, 1, 6},       // +4(d^2+d+2) x^{d+6}
        {-1, 3, 10, 2, 4},     // -(d^2-3d-10) x^{2d+4}
        {2, -4, -6, 2, 5},     // +(2d^2-4d-6) x^{2d+5}
        {0, 0, 6, 1, 2},       // +6 x^{d+2}
        {-1, 1, 0, 1, 7},      // -(d-1)d x^{d+7}
        {0, 0, -6, 2, 3},      // -6 x^{2d+3}
        {-1, 1, 0, 2, 6},      // -(d-1)d x^{2d+6}
        {0, 0, 2, 3, 4},       // +2 x^{3d+4}
        {0, 0, -6, 0, 7},      // -6 x^7
        {0, 0, 22, 0, 6},      // +22 x^6
        {0, 0, -30, 0, 5},     // -30 x^5
        {0, 0, 20, 0, 4},      // +20 x^4
        {0, 0, -10, 0, 3},     // -10 x^3
        {0, 0, 6, 0, 2},       // +6 x^2
        {0, 0, -2, 0, 1},      // -2 x
    }};
    return terms;
}

RationalGF t_gf_from_table(int d, const std::array<FdTerm, 18>& terms) {
    if (d < 0) throw Error(ErrorCode::UnsupportedD, "generating functions require d >= 0");
    IntPolynomial f;
    for (const FdTerm& t : terms) {
        Int coeff = Int(t.c2) * d * d + Int(t.c1) * d + t.c0;
        f = f + IntPolynomial::monomial(coeff, t.ed * d + t.e0);
    }
    // g_d = 2((x-1)^3 - (x-1)x^{d+1})^3
    IntPolynomial xm1{-1, 1};
    IntPolynomial inner = xm1 * xm1 * xm1 - xm1 * IntPolynomial::monomial(1, d + 1);
    return RationalGF(f, (inner * inner * inner) * Int(2));
}

RationalGF t_gf(int d) { return t_gf_from_table(d, fd_terms()); }

}  // namespace ddyck
