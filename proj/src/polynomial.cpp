#include "ddyck/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ddyck {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Int& coeff, int exponent) {
    std::vector<Int> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c = coeffs_;
    for (Int& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
    std::vector<Int> c = coeffs_;
    for (Int& x : c) x *= scalar;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& x : coeffs_) g = boost::multiprecision::gcd(g, x);
    return g;
}

IntPolynomial IntPolynomial::divided_by(const Int& scalar) const {
    std::vector<Int> c = coeffs_;
    for (Int& x : c) x /= scalar;
    return IntPolynomial(std::move(c));
}

RationalGF::RationalGF(IntPolynomial n, IntPolynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.coeff(0) == 0)
        throw Error(ErrorCode::NonUnitConstantTerm,
                    "denominator constant term is zero, series expansion undefined");
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    return RationalGF(num * o.den + o.num * den, den * o.den);
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return RationalGF(num * o.num, den * o.den);
}

bool rational_equal(const RationalGF& f, const RationalGF& g) {
    return f.num * g.den == g.num * f.den;
}

std::vector<Int> series_coeffs(const RationalGF& f, int max_exponent) {
    IntPolynomial num = f.num;
    IntPolynomial den = f.den;
    // Shed the shared scalar factor first (the table-built denominators carry
    // an overall 2); only then insist on a unit constant term.
    Int common = boost::multiprecision::gcd(num.content(), den.content());
    if (common > 1) {
        num = num.divided_by(common);
        den = den.divided_by(common);
    }
    if (den.coeff(0) == -1) {
        num = -num;
        den = -den;
    }
    if (den.coeff(0) != 1)
        throw Error(ErrorCode::NonUnitConstantTerm,
                    "denominator constant term " + den.coeff(0).str() +
                        " is not invertible over the integers");
    // c_k = num_k - sum_{j>=1} den_j * c_{k-j}, the recurrence the
    // denominator induces; exact integers throughout.
    std::vector<Int> c(static_cast<std::size_t>(max_exponent) + 1, 0);
    for (int k = 0; k <= max_exponent; ++k) {
        Int v = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) v -= den.coeff(j) * c[k - j];
        c[static_cast<std::size_t>(k)] = v;
    }
    return c;
}

}  // namespace ddyck
