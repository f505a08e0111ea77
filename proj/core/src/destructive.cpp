#include <netctrl/destructive.hpp>

#include <netctrl/error.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace netctrl {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) fail(ErrorCode::IndexOutOfRange, "vertex out of range");
}

// Every vertex off the mask sees all of it or none of it.
bool outside_all_or_nothing(const Graph& g, uint64_t mask) {
    for (int k = 0; k < g.n; ++k) {
        if ((mask >> k) & 1u) continue;
        uint64_t seen = g.neighbors(k) & mask;
        if (seen != 0 && seen != mask) return false;
    }
    return true;
}

std::vector<FieldElement> lift(const std::vector<Rational>& v) {
    std::vector<FieldElement> y;
    y.reserve(v.size());
    for (const Rational& r : v) y.emplace_back(r);
    return y;
}

void assert_rational_eigenpair(const IntMatrix& L, const Integer& lambda,
                               const std::vector<Rational>& vec, const char* what) {
    if (!verify_eigenpair(L, FieldElement(lambda), lift(vec)))
        fail(ErrorCode::InconsistentTests, std::string(what) + " certificate fails the eigen-condition");
}

std::optional<DcdCertificate> dcd_check(const Graph& g, const IntMatrix& L, int p, int q) {
    uint64_t mask = (1ull << p) | (1ull << q);
    if (!outside_all_or_nothing(g, mask)) return std::nullopt;
    if (g.degree(p) != g.degree(q))
        fail(ErrorCode::InconsistentTests, "matched pair with unequal degrees");
    DcdCertificate c;
    c.p = p;
    c.q = q;
    c.adjacentPair = g.has_edge(p, q);
    c.eigenvalue = Integer(g.degree(p) + (c.adjacentPair ? 1 : 0));
    c.vec.assign(g.n, Rational(0));
    c.vec[p] = 1;
    c.vec[q] = -1;
    assert_rational_eigenpair(L, c.eigenvalue, c.vec, "pair");
    return c;
}

std::optional<TcdCertificate> tcd_check(const Graph& g, const IntMatrix& L, int a, int b, int c) {
    uint64_t mask = (1ull << a) | (1ull << b) | (1ull << c);
    if (!outside_all_or_nothing(g, mask)) return std::nullopt;

    int t[3] = {a, b, c};
    std::sort(t, t + 3);
    auto inTriple = [&](int u, int v) { return g.has_edge(u, v) ? 1 : 0; };
    int m3 = inTriple(t[0], t[1]) + inTriple(t[0], t[2]) + inTriple(t[1], t[2]);

    TcdCertificate cert;
    switch (m3) {
    case 3:
        cert.topologyClass = TcdClass::I;
        cert.p = t[0];
        cert.q = t[1];
        cert.r = t[2];
        break;
    case 2: {
        cert.topologyClass = TcdClass::II;
        int center = -1;
        for (int u : t)
            if (__builtin_popcountll(g.neighbors(u) & mask) == 2) center = u;
        if (center < 0)
            fail(ErrorCode::InconsistentTests, "two induced edges but no path center");
        std::vector<int> ends;
        for (int u : t)
            if (u != center) ends.push_back(u);
        cert.p = center;
        cert.q = ends[0];
        cert.r = ends[1];
        break;
    }
    case 1: {
        cert.topologyClass = TcdClass::III;
        std::vector<int> joined, alone;
        for (int u : t)
            (__builtin_popcountll(g.neighbors(u) & mask) == 1 ? joined : alone).push_back(u);
        if (joined.size() != 2 || alone.size() != 1)
            fail(ErrorCode::InconsistentTests, "one induced edge with a bad degree pattern");
        cert.p = joined[0];
        cert.q = joined[1];
        cert.r = alone[0];
        break;
    }
    default:
        cert.topologyClass = TcdClass::IV;
        cert.p = t[0];
        cert.q = t[1];
        cert.r = t[2];
        break;
    }

    int dp = g.degree(cert.p), dq = g.degree(cert.q), dr = g.degree(cert.r);
    bool degreesFit = false;
    switch (cert.topologyClass) {
    case TcdClass::I:
        degreesFit = dp == dq && dq == dr;
        cert.eigenvalue = Integer(dp + 1);
        break;
    case TcdClass::II:
        degreesFit = dq == dr && dp == dq + 1;
        cert.eigenvalue = Integer(dp + 1);
        break;
    case TcdClass::III:
        degreesFit = dp == dq && dp == dr + 1;
        cert.eigenvalue = Integer(dr);
        break;
    case TcdClass::IV:
        degreesFit = dp == dq && dq == dr;
        cert.eigenvalue = Integer(dr);
        break;
    }
    if (!degreesFit)
        fail(ErrorCode::InconsistentTests, "matched triple with an impossible degree pattern");

    cert.vec.assign(g.n, Rational(0));
    if (cert.topologyClass == TcdClass::II) {
        cert.vec[cert.p] = -2;
        cert.vec[cert.q] = 1;
        cert.vec[cert.r] = 1;
    } else {
        cert.vec[cert.p] = 1;
        cert.vec[cert.q] = 1;
        cert.vec[cert.r] = -2;
    }
    assert_rational_eigenpair(L, cert.eigenvalue, cert.vec, "triple");
    return cert;
}

} // namespace

std::optional<DcdCertificate> is_dcd_pair(const Graph& g, int p, int q) {
    check_vertex(g, p);
    check_vertex(g, q);
    if (p == q) fail(ErrorCode::SameVertex, "a pair needs two distinct vertices");
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "pair detection needs a connected graph");
    if (p > q) std::swap(p, q);
    return dcd_check(g, laplacian(g), p, q);
}

std::vector<DcdCertificate> all_dcd_pairs(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "pair detection needs a connected graph");
    IntMatrix L = laplacian(g);
    std::vector<DcdCertificate> out;
    for (int p = 0; p < g.n; ++p)
        for (int q = p + 1; q < g.n; ++q)
            if (auto c = dcd_check(g, L, p, q)) out.push_back(std::move(*c));
    return out;
}

std::string tcd_class_str(TcdClass c) {
    switch (c) {
    case TcdClass::I: return "I";
    case TcdClass::II: return "II";
    case TcdClass::III: return "III";
    default: return "IV";
    }
}

std::optional<TcdCertificate> classify_tcd_triple(const Graph& g, int p, int q, int r) {
    check_vertex(g, p);
    check_vertex(g, q);
    check_vertex(g, r);
    if (p == q || p == r || q == r)
        fail(ErrorCode::DuplicateVertex, "a triple needs three distinct vertices");
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "triple detection needs a connected graph");
    return tcd_check(g, laplacian(g), p, q, r);
}

std::vector<TcdCertificate> all_tcd_triples(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "triple detection needs a connected graph");
    IntMatrix L = laplacian(g);
    std::vector<TcdCertificate> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (auto cert = tcd_check(g, L, a, b, c)) out.push_back(std::move(*cert));
    return out;
}

LaplacianEigenspaces::LaplacianEigenspaces(const Graph& g) : g_(g) {
    if (!is_connected(g_))
        fail(ErrorCode::DisconnectedGraph, "eigenspace decomposition needs a connected graph");
    IntMatrix L = laplacian(g_);
    IntegerPolynomial cp = char_poly(L);
    for (const IntegerPolynomial& f : detail::factor(cp, 16))
        if (factors_.empty() || !(factors_.back() == f)) factors_.push_back(f);
    for (const IntegerPolynomial& f : factors_) {
        FieldElement lam;
        if (f.degree() == 1)
            lam = FieldElement(Rational(Integer(-f.c[0]), f.c[1]));
        else
            lam = FieldElement::generator(make_field(f));
        Matrix<FieldElement> M(g_.n, g_.n);
        for (int i = 0; i < g_.n; ++i)
            for (int j = 0; j < g_.n; ++j) {
                M(i, j) = FieldElement(L(i, j));
                if (i == j) M(i, j) -= lam;
            }
        auto basis = null_space(M);
        if (basis.empty())
            fail(ErrorCode::InconsistentTests, "characteristic factor with an empty eigenspace");
        lambdas_.push_back(std::move(lam));
        bases_.push_back(std::move(basis));
    }
}

std::optional<SupportWitness> LaplacianEigenspaces::support_witness(const std::vector<int>& support) const {
    if (support.empty()) fail(ErrorCode::EmptySupport, "support must be nonempty");
    uint64_t mask = 0;
    for (int v : support) {
        check_vertex(g_, v);
        if ((mask >> v) & 1u) fail(ErrorCode::DuplicateVertex, "repeated support vertex");
        mask |= 1ull << v;
    }
    if (static_cast<int>(support.size()) == g_.n)
        fail(ErrorCode::EmptySupport, "support leaves no vertex to pin to zero");
    std::vector<int> pinned;
    for (int v = 0; v < g_.n; ++v)
        if (!((mask >> v) & 1u)) pinned.push_back(v);

    for (size_t fi = 0; fi < factors_.size(); ++fi) {
        const auto& W = bases_[fi];
        const int m = static_cast<int>(W.size());
        Matrix<FieldElement> C(static_cast<int>(pinned.size()), m);
        for (size_t r = 0; r < pinned.size(); ++r)
            for (int j = 0; j < m; ++j) C(static_cast<int>(r), j) = W[j][pinned[r]];
        auto K = null_space(C);
        if (K.empty()) continue;

        // Basis of the eigenvectors vanishing on the pinned set.
        std::vector<std::vector<FieldElement>> U;
        for (const auto& coef : K) {
            std::vector<FieldElement> u(g_.n, FieldElement(0));
            for (int j = 0; j < m; ++j) {
                if (coef[j].is_zero()) continue;
                for (int v = 0; v < g_.n; ++v) u[v] += coef[j] * W[j][v];
            }
            U.push_back(std::move(u));
        }

        // A support coordinate that vanishes on the whole restricted
        // subspace rules this eigenvalue out.
        bool dead = false;
        for (int s : support) {
            bool allZero = true;
            for (const auto& u : U)
                if (!u[s].is_zero()) {
                    allZero = false;
                    break;
                }
            if (allZero) {
                dead = true;
                break;
            }
        }
        if (dead) continue;

        // Mix the basis with powers of a scalar until every support
        // coordinate is nonzero. Each coordinate kills at most |U|-1
        // scalar choices, so the loop is guaranteed to end in bound.
        const long bound = static_cast<long>(support.size()) * (static_cast<long>(U.size()) - 1) + 1;
        for (long tval = 1; tval <= bound; ++tval) {
            std::vector<FieldElement> y(g_.n, FieldElement(0));
            FieldElement weight(1);
            const FieldElement step{Integer(tval)};
            for (const auto& u : U) {
                for (int v = 0; v < g_.n; ++v)
                    if (!u[v].is_zero()) y[v] += weight * u[v];
                weight *= step;
            }
            bool full = true;
            for (int s : support)
                if (y[s].is_zero()) {
                    full = false;
                    break;
                }
            if (!full) continue;
            for (int v : pinned)
                if (!y[v].is_zero())
                    fail(ErrorCode::InconsistentTests, "support witness leaks onto a pinned vertex");
            if (!verify_eigenpair(laplacian(g_), lambdas_[fi], y))
                fail(ErrorCode::InconsistentTests, "support witness fails the eigen-condition");
            return SupportWitness{lambdas_[fi], std::move(y)};
        }
        fail(ErrorCode::InconsistentTests, "witness mixing exceeded its guaranteed bound");
    }
    return std::nullopt;
}

std::optional<SupportWitness> eigenvector_support_search(const Graph& g, const std::vector<int>& support) {
    return LaplacianEigenspaces(g).support_witness(support);
}

bool QcdCatalog::contains(const CanonicalCode& code) const {
    return std::binary_search(entries.begin(), entries.end(), code);
}

namespace {

// Center of the induced 3-star, if the four vertices induce one.
std::optional<int> star_center(const Graph& g, const std::array<int, 4>& quad) {
    uint64_t mask = 0;
    for (int v : quad) mask |= 1ull << v;
    int center = -1, leaves = 0;
    for (int v : quad) {
        int d = __builtin_popcountll(g.neighbors(v) & mask);
        if (d == 3)
            center = v;
        else if (d == 1)
            ++leaves;
        else
            return std::nullopt;
    }
    if (center < 0 || leaves != 3) return std::nullopt;
    return center;
}

std::string edges_str(const Graph& g) {
    std::ostringstream os;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << ' ';
        os << u + 1 << '-' << v + 1;
        first = false;
    }
    return os.str();
}

std::string lambda_str(const FieldElement& lam) {
    if (lam.is_rational()) return lam.str();
    return lam.str() + " mod " + poly_str(lam.field()->modulus());
}

// The screens assume a fixed role labeling with k attached to the star
// center; build it from the attachment pattern.
std::optional<StarQuadRoles> screen_roles(const Graph& g, const std::array<int, 4>& quad, int center, int k) {
    StarQuadRoles roles;
    roles.s1 = center;
    roles.k = k;
    if (!g.has_edge(k, center)) return std::nullopt;
    std::vector<int> hit, missed;
    for (int v : quad) {
        if (v == center) continue;
        (g.has_edge(k, v) ? hit : missed).push_back(v);
    }
    if (missed.empty()) { // k sees all four
        roles.s2 = hit[0];
        roles.t1 = hit[1];
        roles.t2 = hit[2];
        return roles;
    }
    if (missed.size() == 1) { // k misses one leaf: that leaf plays t2
        roles.s2 = hit[0];
        roles.t1 = hit[1];
        roles.t2 = missed[0];
        return roles;
    }
    if (hit.size() == 1) { // k sees the center and one leaf
        roles.s2 = hit[0];
        roles.t1 = missed[0];
        roles.t2 = missed[1];
        return roles;
    }
    return std::nullopt; // k sees the center only: no screened case
}

} // namespace

QcdCatalog derive_qcd_catalog() {
    QcdCatalog cat;
    std::map<CanonicalCode, bool> classes;
    long long graphs = 0, candidates = 0, hits = 0, screens = 0;

    enumerate_connected_graphs(5, [&](const Graph& g) {
        ++graphs;
        LaplacianEigenspaces eig(g);
        for (int k = 0; k < 5; ++k) {
            ++candidates;
            std::array<int, 4> quad{};
            std::vector<int> quadList;
            for (int v = 0; v < 5; ++v)
                if (v != k) {
                    quad[quadList.size()] = v;
                    quadList.push_back(v);
                }
            auto w = eig.support_witness(quadList);
            CanonicalCode code = canonical_form(g, k);

            auto it = classes.find(code);
            if (it != classes.end()) {
                if (it->second != w.has_value())
                    fail(ErrorCode::InconsistentTests, "isomorphic rooted graphs disagree on the quad eigenvector");
            } else {
                classes.emplace(code, w.has_value());
                std::ostringstream line;
                line << "class " << code.hex() << " example edges " << edges_str(g) << " root " << k + 1;
                if (w)
                    line << " eigenvector on the quad, lambda " << lambda_str(w->eigenvalue);
                else
                    line << " no eigenvector on the quad";
                cat.derivationLog.push_back(line.str());
            }

            if (!w) continue;
            ++hits;

            // The excluded vertex must see 2, 3 or 4 quad vertices: one
            // would break its own eigen-condition, zero the connectivity.
            int attach = __builtin_popcountll(g.neighbors(k));
            if (attach < 2 || attach > 4)
                fail(ErrorCode::InconsistentTests, "quad eigenvector beside a badly attached vertex");

            // Eigen-condition at the zero coordinate: its neighbors sum to zero.
            FieldElement sum(0);
            for (int v : quadList)
                if (g.has_edge(k, v)) sum += w->vec[v];
            if (!sum.is_zero())
                fail(ErrorCode::InconsistentTests, "neighbor sum at the excluded vertex is nonzero");

            // Star quads must pass the degree screen their attachment selects.
            if (auto center = star_center(g, quad)) {
                auto roles = screen_roles(g, quad, *center, k);
                if (!roles) {
                    cat.derivationLog.push_back("note: star quad at edges " + edges_str(g) +
                                                " root " + std::to_string(k + 1) +
                                                " attaches outside the screened cases");
                    continue;
                }
                ScreenReport rep = lemma3_screen(g, *roles);
                ScreenStatus active = rep.situation == 'a'   ? rep.harmonicIdentity
                                      : rep.situation == 'b' ? rep.surdEquality
                                                             : rep.degreeBalance;
                if (rep.situation == '-' || active != ScreenStatus::Satisfied)
                    fail(ErrorCode::InconsistentTests, "certified star-quad hit fails its degree screen");
                ++screens;
            }
        }
    });

    for (const auto& [code, hit] : classes)
        if (hit) cat.entries.push_back(code);

    std::ostringstream sum;
    sum << "graphs swept " << graphs << ", rooted candidates " << candidates << ", distinct rooted classes "
        << classes.size() << ", hits certified " << hits << ", star-quad screens passed " << screens
        << ", classes with a quad eigenvector " << cat.entries.size();
    cat.derivationLog.push_back(sum.str());
    return cat;
}

std::string serialize_catalog(const QcdCatalog& c) {
    std::ostringstream os;
    os << "netctrl.qcd-catalog.v1\n";
    os << "generator: exhaustive-n5-eigenspace-oracle\n";
    os << "entries: " << c.entries.size() << "\n";
    for (const CanonicalCode& e : c.entries) os << e.hex() << "\n";
    return os.str();
}

QcdCatalog parse_catalog(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "netctrl.qcd-catalog.v1")
        fail(ErrorCode::ParseError, "missing catalog header");
    if (!std::getline(is, line) || line.rfind("generator: ", 0) != 0)
        fail(ErrorCode::ParseError, "missing generator line");
    if (!std::getline(is, line) || line.rfind("entries: ", 0) != 0)
        fail(ErrorCode::ParseError, "missing entry count");
    const std::string digits = line.substr(9);
    size_t count = 0, used = 0;
    bool countOk = !digits.empty();
    if (countOk) {
        try {
            count = std::stoul(digits, &used);
        } catch (const std::exception&) {
            countOk = false;
        }
        countOk = countOk && used == digits.size();
    }
    if (!countOk) fail(ErrorCode::ParseError, "bad entry count");
    QcdCatalog cat;
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line) || line.empty())
            fail(ErrorCode::ParseError, "fewer codes than the declared count");
        cat.entries.push_back(CanonicalCode::from_hex(line));
    }
    while (std::getline(is, line))
        if (!line.empty()) fail(ErrorCode::ParseError, "trailing content after the declared codes");
    if (!std::is_sorted(cat.entries.begin(), cat.entries.end()))
        fail(ErrorCode::ParseError, "catalog codes are not in ascending order");
    return cat;
}

std::vector<QcdCertificate> qcd_quads_5(const Graph& g, const QcdCatalog& catalog) {
    if (g.n != 5) fail(ErrorCode::WrongSize, "quad detection is defined for five-vertex graphs");
    LaplacianEigenspaces eig(g);
    std::vector<QcdCertificate> out;
    for (int k = 0; k < 5; ++k) {
        std::vector<int> quadList;
        for (int v = 0; v < 5; ++v)
            if (v != k) quadList.push_back(v);
        CanonicalCode code = canonical_form(g, k);
        auto w = eig.support_witness(quadList);
        if (catalog.contains(code) != w.has_value())
            fail(ErrorCode::InconsistentTests, "catalog lookup disagrees with the eigenspace oracle");
        if (!w) continue;
        QcdCertificate cert;
        std::copy(quadList.begin(), quadList.end(), cert.quad.begin());
        cert.k = k;
        cert.eigenvalue = std::move(w->eigenvalue);
        cert.vec = std::move(w->vec);
        cert.catalogCode = std::move(code);
        out.push_back(std::move(cert));
    }
    return out;
}

namespace {

Rational unit_over(const Integer& z) {
    Rational r(Integer(1), z);
    r.canonicalize();
    return r;
}

} // namespace

ScreenStatus star_quad_harmonic(const Integer& ds1, const Integer& ds2,
                                const Integer& dt1, const Integer& dt2) {
    Integer z1 = dt2 - ds1 - 1, z2 = dt1 - ds1 - 1, z3 = ds2 - ds1 - 1;
    if (z1 == 0 || z2 == 0 || z3 == 0) return ScreenStatus::Violated;
    Rational sum = unit_over(z1) + unit_over(z2) + unit_over(z3);
    return sum == Rational(-1) ? ScreenStatus::Satisfied : ScreenStatus::Violated;
}

ScreenStatus star_quad_surd_equality(const Integer& ds1, const Integer& ds2,
                                     const Integer& dt1, const Integer& dt2) {
    Integer s1 = dt1 + ds2 + 2, p1 = (dt1 + 1) * (ds2 + 1) - 1;
    Integer s2 = ds1 + dt2 + 1, p2 = ds1 * dt2 + dt2 - 1;
    Integer d1 = s1 * s1 - 4 * p1, d2 = s2 * s2 - 4 * p2;
    bool sq1 = d1 >= 0 && mpz_perfect_square_p(d1.get_mpz_t()) != 0;
    bool sq2 = d2 >= 0 && mpz_perfect_square_p(d2.get_mpz_t()) != 0;
    if (sq1 && sq2) {
        Integer r1 = sqrt(d1), r2 = sqrt(d2);
        Rational roots1[2] = {Rational(Integer(s1 - r1), Integer(2)), Rational(Integer(s1 + r1), Integer(2))};
        Rational roots2[2] = {Rational(Integer(s2 - r2), Integer(2)), Rational(Integer(s2 + r2), Integer(2))};
        for (Rational& r : roots1) r.canonicalize();
        for (Rational& r : roots2) r.canonicalize();
        for (const Rational& x : roots1)
            for (const Rational& y : roots2)
                if (x == y) return ScreenStatus::Satisfied;
        return ScreenStatus::Violated;
    }
    if (sq1 != sq2) return ScreenStatus::Violated; // rational roots never equal irrational ones
    // Both pairs irrational (or complex): equal surds need equal trace and radicand.
    return (s1 == s2 && d1 == d2) ? ScreenStatus::Satisfied : ScreenStatus::Violated;
}

ScreenStatus star_quad_balance(const Integer& ds1, const Integer& ds2,
                               const Integer& dt1, const Integer& dt2) {
    Integer z1 = dt1 - ds2 - 1, z2 = dt2 - ds2 - 1;
    if (z1 == 0 || z2 == 0) return ScreenStatus::Violated;
    Rational lhs{Integer(ds1 - ds2)};
    return lhs == unit_over(z1) + unit_over(z2) ? ScreenStatus::Satisfied : ScreenStatus::Violated;
}

ScreenReport lemma3_screen(const Graph& g, const StarQuadRoles& roles) {
    if (g.n != 5) fail(ErrorCode::WrongSize, "the screen is defined for five-vertex graphs");
    const int ids[5] = {roles.s1, roles.s2, roles.t1, roles.t2, roles.k};
    uint64_t seen = 0;
    for (int v : ids) {
        check_vertex(g, v);
        if ((seen >> v) & 1u) fail(ErrorCode::DuplicateVertex, "roles must name five distinct vertices");
        seen |= 1ull << v;
    }
    // The quad must induce exactly the 3-star centered on s1.
    bool star = g.has_edge(roles.s1, roles.s2) && g.has_edge(roles.s1, roles.t1) &&
                g.has_edge(roles.s1, roles.t2) && !g.has_edge(roles.s2, roles.t1) &&
                !g.has_edge(roles.s2, roles.t2) && !g.has_edge(roles.t1, roles.t2);
    if (!star) fail(ErrorCode::WrongTopology, "the four vertices must induce a star centered on s1");

    Integer ds1(g.degree(roles.s1)), ds2(g.degree(roles.s2));
    Integer dt1(g.degree(roles.t1)), dt2(g.degree(roles.t2));
    bool ks1 = g.has_edge(roles.k, roles.s1), ks2 = g.has_edge(roles.k, roles.s2);
    bool kt1 = g.has_edge(roles.k, roles.t1), kt2 = g.has_edge(roles.k, roles.t2);

    ScreenReport rep;
    if (ks1 && ks2 && kt1 && kt2) {
        rep.situation = 'a';
        rep.harmonicIdentity = star_quad_harmonic(ds1, ds2, dt1, dt2);
    } else if (ks1 && ks2 && kt1 && !kt2) {
        rep.situation = 'b';
        rep.surdEquality = star_quad_surd_equality(ds1, ds2, dt1, dt2);
    } else if (ks1 && ks2 && !kt1 && !kt2) {
        rep.situation = 'c';
        rep.degreeBalance = star_quad_balance(ds1, ds2, dt1, dt2);
    } else {
        std::ostringstream note;
        note << "k attaches to {";
        bool first = true;
        auto add = [&](bool on, const char* name) {
            if (!on) return;
            if (!first) note << ", ";
            note << name;
            first = false;
        };
        add(ks1, "s1");
        add(ks2, "s2");
        add(kt1, "t1");
        add(kt2, "t2");
        note << "}; the screens cover all four, {s1, s2, t1} and {s1, s2} - relabel the"
                " symmetric roles (s2/t1/t2 in a, s2/t1 in b, t1/t2 in c) to match";
        rep.note = note.str();
    }
    return rep;
}

} // namespace netctrl
