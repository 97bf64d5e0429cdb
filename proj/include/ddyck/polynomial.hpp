// Exact integer-coefficient polynomials, unreduced rational functions, and
// Maclaurin coefficient extraction. No floating point anywhere.
#pragma once

#include <initializer_list>
#include <vector>

#include "ddyck/types.hpp"

namespace ddyck {

class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs);                  // index = exponent
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial monomial(const Int& coeff, int exponent);

    // coefficient of x^i (0 beyond the stored degree)
    const Int& coeff(int i) const;
    // -1 for the zero polynomial (stands in for the -infinity sentinel)
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& scalar) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // gcd of |coefficients| (0 for the zero polynomial)
    Int content() const;
    IntPolynomial divided_by(const Int& scalar) const;  // exact, caller guarantees

  private:
    void trim();
    std::vector<Int> coeffs_;
};

// Numerator/denominator pair, deliberately never reduced; the denominator
// must have a nonzero constant term so the series expansion exists.
struct RationalGF {
    IntPolynomial num;
    IntPolynomial den;

    RationalGF(IntPolynomial n, IntPolynomial d);

    RationalGF operator+(const RationalGF& o) const;
    RationalGF operator*(const RationalGF& o) const;
};

// Cross-multiplication equality: num_f * den_g == num_g * den_f.
bool rational_equal(const RationalGF& f, const RationalGF& g);

// First max_exponent+1 Maclaurin coefficients, exact. Removes the common
// integer content of numerator and denominator, then requires the remaining
// denominator constant term to be +-1 (negating both when -1); throws
// Error(NonUnitConstantTerm) otherwise.
std::vector<Int> series_coeffs(const RationalGF& f, int max_exponent);

}  // namespace ddyck
