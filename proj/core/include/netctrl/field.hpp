#ifndef NETCTRL_FIELD_HPP
#define NETCTRL_FIELD_HPP

#include <netctrl/polynomial.hpp>

#include <memory>
#include <string>
#include <vector>

namespace netctrl {

// Q[x]/(f) for an irreducible modulus f. Elements carry a shared_ptr to
// their field; a null field pointer means "plain rational", which mixes
// freely with any modulus (constants embed in every extension).
class NumberField {
public:
    // f: primitive, positive leading coefficient, degree >= 1. Irreducibility
    // is the caller's contract (factors come from irreducible_factors).
    explicit NumberField(IntegerPolynomial f);

    const IntegerPolynomial& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

private:
    IntegerPolynomial modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntegerPolynomial& modulus);

class FieldElement {
public:
    FieldElement() : rep_{Rational(0)} {}
    FieldElement(int v) : rep_{Rational(v)} {}
    FieldElement(const Integer& v) : rep_{Rational(v)} {}
    FieldElement(Rational v) : rep_{std::move(v)} { rep_[0].canonicalize(); }
    FieldElement(FieldPtr field, std::vector<Rational> rep);

    // The class of x in Q[x]/(f).
    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& rep() const { return rep_; }

    bool is_zero() const;
    // True iff the element lies in Q (always true for null-field elements).
    bool is_rational() const;
    Rational as_rational() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // "a0 + a1*x + ..." over the rep; plain rational prints as "p/q".
    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Rational> rep_; // size 1 (null field) or field degree
};

// Exact basis of the right null space of M by Gauss-Jordan elimination with
// deterministic pivoting (first nonzero row per column, free columns
// ascending). All entries must share one modulus (rationals mix freely).
std::vector<std::vector<FieldElement>> null_space(const Matrix<FieldElement>& M);

// True iff L*y = lambda*y exactly. DimensionMismatch / ZeroVector on bad input.
bool verify_eigenpair(const IntMatrix& L, const FieldElement& lambda, const std::vector<FieldElement>& y);

} // namespace netctrl

#endif
