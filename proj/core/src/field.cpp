#include <netctrl/field.hpp>

#include <algorithm>

namespace netctrl {

namespace {

using RatPoly = std::vector<Rational>; // ascending, no trailing-zero guarantee

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_ratpoly(const IntegerPolynomial& p) {
    RatPoly v;
    v.reserve(p.c.size());
    for (const Integer& k : p.c) v.emplace_back(k);
    return v;
}

// a = q*b + r with deg r < deg b; b nonzero.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    while (r.size() >= b.size()) {
        Rational f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        trim(r);
    }
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

// Extended Euclid over Q[x]: g = gcd(a,b) with u*a + v*b = g.
void xgcd(RatPoly a, RatPoly b, RatPoly& g, RatPoly& u, RatPoly& v) {
    trim(a);
    trim(b);
    RatPoly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
    while (!b.empty()) {
        RatPoly q, r;
        divmod(a, b, q, r);
        RatPoly nu = sub(u0, mul(q, u1));
        RatPoly nv = sub(v0, mul(q, v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    g = std::move(a);
    u = std::move(u0);
    v = std::move(v0);
}

} // namespace

NumberField::NumberField(IntegerPolynomial f) : modulus_(std::move(f)) {
    if (modulus_.degree() < 1) fail(ErrorCode::ModulusMismatch, "field modulus must have degree >= 1");
}

FieldPtr make_field(const IntegerPolynomial& modulus) {
    return std::make_shared<NumberField>(modulus);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
    for (Rational& v : rep_) v.canonicalize(); // mpq_class leaves 2/4 alone
    if (!field_) {
        if (rep_.size() != 1) fail(ErrorCode::ModulusMismatch, "rational element needs a single coefficient");
        return;
    }
    // reduce mod f and pad to the field degree
    RatPoly r = rep_;
    trim(r);
    if (static_cast<int>(r.size()) > field_->degree()) {
        RatPoly q, rem;
        divmod(r, to_ratpoly(field_->modulus()), q, rem);
        r = std::move(rem);
    }
    r.resize(field_->degree(), Rational(0));
    rep_ = std::move(r);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    if (!field) fail(ErrorCode::ModulusMismatch, "generator needs a field");
    std::vector<Rational> rep(field->degree(), Rational(0));
    if (field->degree() == 1) {
        // f = a*x + b: the class of x is the rational root -b/a.
        rep[0] = Rational(-field->modulus().c[0]) / Rational(field->modulus().c[1]);
    } else {
        rep[1] = 1;
    }
    return FieldElement(field, std::move(rep));
}

bool FieldElement::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](const Rational& v) { return v == 0; });
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < rep_.size(); ++i)
        if (rep_[i] != 0) return false;
    return true;
}

Rational FieldElement::as_rational() const {
    if (!is_rational()) fail(ErrorCode::ModulusMismatch, "element is not rational");
    return rep_[0];
}

namespace {

// Shared-field resolution: null mixes with anything; two concrete fields
// must agree on the modulus.
FieldPtr join_fields(const FieldElement& a, const FieldElement& b) {
    if (!a.field()) return b.field();
    if (!b.field()) return a.field();
    if (a.field() == b.field() || a.field()->modulus() == b.field()->modulus()) return a.field();
    fail(ErrorCode::ModulusMismatch, "elements of different fields: (" + poly_str(a.field()->modulus()) +
                                         ") vs (" + poly_str(b.field()->modulus()) + ")");
}

std::vector<Rational> coerce(const FieldElement& e, const FieldPtr& f) {
    if (!f) return e.rep();
    std::vector<Rational> r = e.rep();
    r.resize(f->degree(), Rational(0));
    return r;
}

} // namespace

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (Rational& v : r.rep_) v = -v;
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = join_fields(a, b);
    std::vector<Rational> ra = coerce(a, f), rb = coerce(b, f);
    for (size_t i = 0; i < ra.size(); ++i) ra[i] += rb[i];
    return FieldElement(f, std::move(ra));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = join_fields(a, b);
    std::vector<Rational> ra = coerce(a, f), rb = coerce(b, f);
    for (size_t i = 0; i < ra.size(); ++i) ra[i] -= rb[i];
    return FieldElement(f, std::move(ra));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = join_fields(a, b);
    RatPoly prod = mul(a.rep(), b.rep());
    if (prod.empty()) prod.push_back(Rational(0));
    return FieldElement(f, std::move(prod)); // constructor reduces mod f
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (b.is_zero()) fail(ErrorCode::ZeroVector, "division by zero field element");
    FieldPtr f = join_fields(a, b);
    if (!f) return FieldElement(a.rep()[0] / b.rep()[0]);
    // invert b mod f: u*b + v*f = g (nonzero constant by irreducibility)
    RatPoly g, u, v;
    xgcd(coerce(b, f), to_ratpoly(f->modulus()), g, u, v);
    if (g.size() != 1)
        fail(ErrorCode::ModulusMismatch, "modulus is not irreducible: gcd with (" + poly_str(f->modulus()) + ")");
    for (Rational& coef : u) coef /= g[0];
    FieldElement inv(f, std::move(u));
    return a * inv;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    FieldPtr f;
    if (!a.field() || !b.field() || a.field() == b.field() || a.field()->modulus() == b.field()->modulus())
        f = a.field() ? a.field() : b.field();
    else
        return false; // different fields never compare equal
    return coerce(a, f) == coerce(b, f);
}

std::string FieldElement::str() const {
    if (is_rational()) return rat_str(rep_[0]);
    std::string s;
    for (size_t k = 0; k < rep_.size(); ++k) {
        if (rep_[k] == 0) continue;
        Rational mag = abs(rep_[k]);
        bool neg = rep_[k] < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0) {
            s += rat_str(mag);
        } else {
            if (mag != 1) s += rat_str(mag) + "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<std::vector<FieldElement>> null_space(const Matrix<FieldElement>& M) {
    int rows = M.rows(), cols = M.cols();

    // Resolve the common field up front (also surfaces ModulusMismatch).
    FieldElement probe(0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) probe = probe + (M(i, j) - M(i, j));
    FieldPtr f = probe.field();

    Matrix<FieldElement> A = M;
    std::vector<int> pivotColOfRow;
    std::vector<bool> isPivotCol(cols, false);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!A(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(A(r, j), A(pr, j));
        FieldElement inv = FieldElement(1) / A(r, c);
        for (int j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A(i, c).is_zero()) continue;
            FieldElement factor = A(i, c);
            for (int j = c; j < cols; ++j) A(i, j) = A(i, j) - factor * A(r, j);
        }
        pivotColOfRow.push_back(c);
        isPivotCol[c] = true;
        ++r;
    }

    std::vector<std::vector<FieldElement>> basis;
    for (int c = 0; c < cols; ++c) {
        if (isPivotCol[c]) continue;
        std::vector<FieldElement> v(cols, FieldElement(0));
        v[c] = FieldElement(1);
        for (size_t i = 0; i < pivotColOfRow.size(); ++i) v[pivotColOfRow[i]] = -A(static_cast<int>(i), c);
        if (f) // keep the whole vector in one field for downstream use
            for (auto& x : v) x = x + FieldElement(f, std::vector<Rational>(f->degree(), Rational(0)));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool verify_eigenpair(const IntMatrix& L, const FieldElement& lambda, const std::vector<FieldElement>& y) {
    if (L.rows() != L.cols()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
    if (static_cast<int>(y.size()) != L.rows()) fail(ErrorCode::DimensionMismatch, "vector length != matrix size");
    bool allZero = true;
    for (const auto& v : y)
        if (!v.is_zero()) {
            allZero = false;
            break;
        }
    if (allZero) fail(ErrorCode::ZeroVector, "eigenvector must be nonzero");
    for (int i = 0; i < L.rows(); ++i) {
        FieldElement lhs(0);
        for (int j = 0; j < L.cols(); ++j) {
            if (L(i, j) == 0) continue;
            lhs += FieldElement(L(i, j)) * y[j];
        }
        if (lhs != lambda * y[i]) return false;
    }
    return true;
}

} // namespace netctrl
