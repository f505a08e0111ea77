#include <netctrl/polynomial.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace netctrl {

Integer IntegerPolynomial::content() const {
    Integer g = 0;
    for (const Integer& k : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    IntegerPolynomial r;
    r.c.reserve(c.size());
    for (const Integer& k : c) r.c.push_back(k / g);
    return r;
}

Integer IntegerPolynomial::eval(const Integer& t) const {
    Integer v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

Rational IntegerPolynomial::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
    IntegerPolynomial d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(Integer(static_cast<long>(k)) * c[k]);
    d.normalize();
    return d;
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    IntegerPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    IntegerPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntegerPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

IntegerPolynomial operator*(const Integer& k, const IntegerPolynomial& a) {
    if (k == 0) return {};
    IntegerPolynomial r = a;
    for (Integer& v : r.c) v *= k;
    return r;
}

std::string poly_str(const IntegerPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        const Integer& a = p.c[k];
        if (a == 0) continue;
        Integer mag = abs(a);
        bool neg = a < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

namespace {

// Rational-coefficient long division a = q*b + r, deg r < deg b. b nonzero.
void rat_divide(const std::vector<Rational>& a, const std::vector<Rational>& b,
                std::vector<Rational>& q, std::vector<Rational>& r) {
    r = a;
    while (!r.empty() && r.back() == 0) r.pop_back();
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rational f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
}

std::vector<Rational> to_rat(const IntegerPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.c.size());
    for (const Integer& k : p.c) v.emplace_back(k);
    return v;
}

} // namespace

bool divides(const IntegerPolynomial& b, const IntegerPolynomial& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (b.degree() > a.degree()) return false;
    std::vector<Rational> q, r;
    rat_divide(to_rat(a), to_rat(b), q, r);
    return r.empty();
}

IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (b.is_zero()) fail(ErrorCode::InconsistentTests, "exact division by zero polynomial");
    std::vector<Rational> q, r;
    rat_divide(to_rat(a), to_rat(b), q, r);
    if (!r.empty()) fail(ErrorCode::InconsistentTests, "exact division left a remainder");
    IntegerPolynomial out;
    out.c.reserve(q.size());
    for (const Rational& v : q) {
        if (v.get_den() != 1) fail(ErrorCode::InconsistentTests, "exact division produced non-integer quotient");
        out.c.push_back(v.get_num());
    }
    out.normalize();
    return out;
}

IntegerPolynomial char_poly(const IntMatrix& M) {
    if (M.rows() != M.cols()) fail(ErrorCode::DimensionMismatch, "char poly needs a square matrix");
    int n = M.rows();
    IntegerPolynomial p;
    p.c.assign(n + 1, Integer(0));
    p.c[n] = 1;
    if (n == 0) return p;

    // Faddeev-LeVerrier: B_1 = M, c_k = -tr(B_k)/k, B_{k+1} = M*(B_k + c_k*I).
    IntMatrix B = M;
    for (int k = 1; k <= n; ++k) {
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += B(i, i);
        Integer ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        p.c[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) B(i, i) += ck;
        B = M * B;
    }
    return p;
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 0): repeatedly scale a by
// lead(b) and cancel the top term. Content blowup is stripped by the caller.
IntegerPolynomial pseudo_rem(IntegerPolynomial a, const IntegerPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Integer scale = b.lead();
        Integer top = a.lead();
        int shift = a.degree() - b.degree();
        // a = scale*a - top * x^shift * b
        IntegerPolynomial shifted;
        shifted.c.assign(shift, Integer(0));
        for (const Integer& v : b.c) shifted.c.push_back(top * v);
        a = scale * a - IntegerPolynomial(std::move(shifted.c));
    }
    return a;
}

} // namespace

IntegerPolynomial poly_gcd(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (p.is_zero() && q.is_zero()) fail(ErrorCode::BothZero, "gcd(0,0) undefined");
    IntegerPolynomial a = p.primitive_part();
    IntegerPolynomial b = q.primitive_part();
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        IntegerPolynomial r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.lead() < 0) a = Integer(-1) * a;
    return a;
}

int rational_rank(const RatMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row (rank-invariant), then run fraction-free
    // Bareiss with full pivoting; every division is exact by construction.
    IntMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Integer l = 1;
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            Rational scaled = M(i, j) * Rational(l);
            A(i, j) = scaled.get_num();
        }
    }

    int rank = 0;
    Integer prev = 1;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = c; j < cols; ++j)
                if (A(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < cols; ++j) swap(A(r, j), A(pi, j));
        if (pj != c)
            for (int i = 0; i < rows; ++i) swap(A(i, c), A(i, pj));

        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer num = A(r, c) * A(i, j) - A(i, c) * A(r, j);
                mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            A(i, c) = 0;
        }
        prev = A(r, c);
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

namespace {

// --- integer factorization for divisor enumeration ---------------------

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

void pollard_rho(const Integer& n, std::map<Integer, int>& out);

void factor_integer(Integer n, std::map<Integer, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    long d = 17;
    while (n > 1 && d <= 65536 && Integer(d) * d <= n) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Integer(d)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    pollard_rho(n, out);
}

void pollard_rho(const Integer& n, std::map<Integer, int>& out) {
    // Brent's cycle variant; n odd composite without small factors here.
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = abs_int(x - y);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) {
            factor_integer(d, out);
            factor_integer(n / d, out);
            return;
        }
    }
}

// All positive divisors of |v| that are <= cap, ascending. v != 0.
std::vector<Integer> divisors_up_to(const Integer& v, const Integer& cap) {
    std::map<Integer, int> pf;
    factor_integer(v, pf);
    std::vector<Integer> divs{Integer(1)};
    for (auto& [p, e] : pf) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            if (pk > cap) break;
            for (size_t i = 0; i < base; ++i) {
                Integer d = divs[i] * pk;
                if (d <= cap) divs.push_back(d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    while (!divs.empty() && divs.back() > cap) divs.pop_back();
    return divs;
}

// --- Kronecker factor search -------------------------------------------

// Coefficient bound for any factor of h (Mignotte-style, deliberately
// loose): 2^deg(h) * (sum over |coeffs of h|).
Integer factor_coeff_bound(const IntegerPolynomial& h) {
    Integer norm = 0;
    for (const Integer& k : h.c) norm += abs_int(k);
    Integer b = norm;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(h.degree()));
    return b;
}

// |w(t)| <= B * (1 + |t| + ... + |t|^m) for any poly w of degree <= m with
// coefficients bounded by B.
Integer value_bound(const Integer& B, const Integer& t, int m) {
    Integer at = abs_int(t);
    Integer geom = 0, pw = 1;
    for (int k = 0; k <= m; ++k) {
        geom += pw;
        pw *= at;
    }
    return B * geom;
}

// Interpolate the unique rational polynomial of degree <= deg(points)-1
// through (t_i, v_i); returns false if any coefficient is non-integer.
bool interpolate_integer(const std::vector<Integer>& ts, const std::vector<Integer>& vs,
                         IntegerPolynomial& out) {
    size_t m = ts.size();
    // Newton divided differences over Q.
    std::vector<Rational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = Rational(vs[i]);
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(ts[i] - ts[i - level]);
            if (i == level) break;
        }
    // Expand the Newton form.
    std::vector<Rational> coeffs{dd[m - 1]};
    for (size_t i = m - 1; i-- > 0;) {
        // coeffs = coeffs*(x - t_i) + dd[i]
        coeffs.insert(coeffs.begin(), Rational(0));
        for (size_t j = 0; j + 1 < coeffs.size(); ++j) coeffs[j] -= Rational(ts[i]) * coeffs[j + 1];
        coeffs[0] += dd[i];
    }
    out.c.clear();
    for (const Rational& v : coeffs) {
        if (v.get_den() != 1) return false;
        out.c.push_back(v.get_num());
    }
    out.normalize();
    return true;
}

// Search for an irreducible factor of squarefree h with 2 <= degree <=
// deg(h)/2; empty optional means h is irreducible (no rational roots by
// precondition). Depth-first over divisor tuples of sample values with
// pairwise (t_i - t_j) | (v_i - v_j) pruning.
std::optional<IntegerPolynomial> kronecker_find_factor(const IntegerPolynomial& h) {
    Integer B = factor_coeff_bound(h);
    std::vector<Integer> pool;
    for (long t = 0; t <= 8; ++t) {
        pool.emplace_back(t);
        if (t > 0) pool.emplace_back(-t);
    }

    for (int dfac = 2; dfac <= h.degree() / 2; ++dfac) {
        // Pick dfac+1 sample points with the smallest |h(t)| (fewest divisor
        // candidates), preferring small |t|.
        std::vector<std::pair<Integer, Integer>> samples; // (t, h(t))
        for (const Integer& t : pool) samples.emplace_back(t, h.eval(t));
        std::stable_sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) {
            return abs_int(a.second) < abs_int(b.second);
        });
        samples.resize(dfac + 1);

        std::vector<Integer> ts, caps;
        std::vector<std::vector<Integer>> cands; // signed divisor candidates per point
        for (auto& [t, v] : samples) {
            ts.push_back(t);
            Integer cap = value_bound(B, t, dfac);
            auto divs = divisors_up_to(v, cap);
            std::vector<Integer> signedDivs;
            for (const Integer& d : divs) {
                signedDivs.push_back(d);
                signedDivs.push_back(-d);
            }
            cands.push_back(std::move(signedDivs));
        }

        std::vector<Integer> chosen(ts.size());
        std::optional<IntegerPolynomial> found;
        std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
            if (depth == ts.size()) {
                IntegerPolynomial w;
                if (!interpolate_integer(ts, chosen, w)) return false;
                if (w.degree() < 1) return false;
                w = w.primitive_part();
                if (w.lead() < 0) w = Integer(-1) * w;
                if (!divides(w, h)) return false;
                found = w;
                return true;
            }
            for (const Integer& d : cands[depth]) {
                bool ok = true;
                for (size_t i = 0; i < depth && ok; ++i) {
                    Integer gap = ts[depth] - ts[i];
                    if (!mpz_divisible_p(Integer(d - chosen[i]).get_mpz_t(), gap.get_mpz_t())) ok = false;
                }
                if (!ok) continue;
                chosen[depth] = d;
                if (dfs(depth + 1)) return true;
            }
            return false;
        };
        if (dfs(0)) return found;
    }
    return std::nullopt;
}

// Rational roots of p (num/den reduced, den > 0): den | lead, num | const.
std::vector<Rational> rational_roots(const IntegerPolynomial& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    Integer c0 = p.c.front();
    if (c0 == 0) {
        roots.emplace_back(0);
        return roots; // caller strips x and retries
    }
    Integer cap = abs_int(c0);
    auto nums = divisors_up_to(c0, cap);
    auto dens = divisors_up_to(p.lead(), abs_int(p.lead()));
    for (const Integer& den : dens)
        for (const Integer& num : nums) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rational r(sign * num, den);
                r.canonicalize();
                if (p.eval(r) == 0) roots.push_back(r);
            }
        }
    return roots;
}

// squarefree, primitive, positive lead, degree >= 1, no further structure
// assumed; returns irreducible factors.
void factor_squarefree(IntegerPolynomial h, std::vector<IntegerPolynomial>& out) {
    // Strip rational roots first: root num/den <=> factor (den*x - num).
    for (;;) {
        if (h.degree() <= 0) return;
        if (h.degree() == 1) {
            out.push_back(h.primitive_part());
            return;
        }
        auto roots = rational_roots(h);
        if (roots.empty()) break;
        for (const Rational& r : roots) {
            IntegerPolynomial lin(std::vector<Integer>{-r.get_num(), r.get_den()});
            h = exact_divide(h, lin);
            out.push_back(lin);
        }
    }
    // No rational roots: degree 2 and 3 are now irreducible.
    for (;;) {
        if (h.degree() <= 0) return;
        if (h.degree() <= 3) {
            if (h.lead() < 0) h = Integer(-1) * h;
            out.push_back(h.primitive_part());
            return;
        }
        auto w = kronecker_find_factor(h);
        if (!w) {
            if (h.lead() < 0) h = Integer(-1) * h;
            out.push_back(h.primitive_part());
            return;
        }
        out.push_back(*w);
        h = exact_divide(h, *w);
    }
}

} // namespace

namespace detail {

std::vector<IntegerPolynomial> factor(const IntegerPolynomial& p, int maxDegree) {
    if (p.is_zero()) fail(ErrorCode::BothZero, "cannot factor the zero polynomial");
    if (p.degree() > maxDegree)
        fail(ErrorCode::DegreeTooLarge,
             "degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(maxDegree));

    std::vector<IntegerPolynomial> out;
    IntegerPolynomial f = p.primitive_part();
    if (f.lead() < 0) f = Integer(-1) * f;

    // x^k factors
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    if (k > 0) {
        f.c.erase(f.c.begin(), f.c.begin() + static_cast<long>(k));
        for (size_t i = 0; i < k; ++i) out.push_back(IntegerPolynomial::x());
    }
    if (f.degree() >= 1) {
        // Yun squarefree decomposition: emit the multiplicity-i squarefree
        // block a_i, then factor each block.
        IntegerPolynomial g = poly_gcd(f, f.derivative());
        IntegerPolynomial b = exact_divide(f, g);
        IntegerPolynomial d = exact_divide(f.derivative(), g) - b.derivative();
        int mult = 1;
        while (b.degree() >= 1) {
            IntegerPolynomial a = d.is_zero() ? b.primitive_part() : poly_gcd(b, d);
            if (a.degree() >= 1) {
                std::vector<IntegerPolynomial> parts;
                factor_squarefree(a, parts);
                for (auto& q : parts)
                    for (int m = 0; m < mult; ++m) out.push_back(q);
            }
            b = exact_divide(b, a);
            if (b.degree() < 1) break;
            d = exact_divide(d, a) - b.derivative();
            ++mult;
        }
    }

    std::sort(out.begin(), out.end(), [](const IntegerPolynomial& a, const IntegerPolynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    return out;
}

} // namespace detail

std::vector<IntegerPolynomial> irreducible_factors(const IntegerPolynomial& p) {
    return detail::factor(p, 8);
}

} // namespace netctrl
