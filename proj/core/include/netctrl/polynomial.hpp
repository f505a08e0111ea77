#ifndef NETCTRL_POLYNOMIAL_HPP
#define NETCTRL_POLYNOMIAL_HPP

#include <netctrl/matrix.hpp>

#include <string>
#include <vector>

namespace netctrl {

// Integer polynomial, coefficients ascending by degree. The zero polynomial
// is the empty vector (degree -1); otherwise the leading (last) coefficient
// is nonzero.
struct IntegerPolynomial {
    std::vector<Integer> c;

    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> coeffs) : c(std::move(coeffs)) { normalize(); }

    static IntegerPolynomial constant(const Integer& k) {
        return IntegerPolynomial(std::vector<Integer>{k});
    }
    // the monomial x
    static IntegerPolynomial x() { return IntegerPolynomial({Integer(0), Integer(1)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Integer& lead() const { return c.back(); }
    Integer coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Integer(0); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    // gcd of all coefficients, positive; 0 for the zero polynomial.
    Integer content() const;
    // content removed; sign of the leading coefficient preserved.
    IntegerPolynomial primitive_part() const;

    Integer eval(const Integer& t) const;
    Rational eval(const Rational& t) const;
    IntegerPolynomial derivative() const;

    bool operator==(const IntegerPolynomial& o) const { return c == o.c; }

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const Integer& k, const IntegerPolynomial& a);
};

// Human-readable ascending form, e.g. "9*x - 6*x^2 + x^3"; "0" when zero.
std::string poly_str(const IntegerPolynomial& p);

// Exact quotient of a by b; asserts the division leaves no remainder.
IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b);

// True iff b divides a exactly over the rationals (quotient may be rational).
bool divides(const IntegerPolynomial& b, const IntegerPolynomial& a);

// det(xI - M) by the Faddeev-LeVerrier recurrence; every intermediate
// division is exact over the integers.
IntegerPolynomial char_poly(const IntMatrix& M);

// Primitive gcd over Q, positive leading coefficient. BothZero if both zero.
IntegerPolynomial poly_gcd(const IntegerPolynomial& p, const IntegerPolynomial& q);

// Exact rank of a rational matrix by fraction-free Bareiss elimination with
// full pivoting.
int rational_rank(const RatMatrix& M);

// Factorization into irreducible factors over Q, each primitive with
// positive leading coefficient, sorted by (degree, coefficients); the
// product equals the input up to a rational unit. Multiple factors repeat.
// pre: nonzero, degree <= 8 (DegreeTooLarge otherwise; BothZero on zero).
std::vector<IntegerPolynomial> irreducible_factors(const IntegerPolynomial& p);

namespace detail {
// Same contract as irreducible_factors but admits degree <= 16; the public
// cap mirrors the published interface, the internal one serves gcd
// certificate extraction on larger designed graphs.
std::vector<IntegerPolynomial> factor(const IntegerPolynomial& p, int maxDegree);
} // namespace detail

} // namespace netctrl

#endif
