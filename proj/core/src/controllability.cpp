#include <netctrl/controllability.hpp>

#include <algorithm>
#include <sstream>

namespace netctrl {

bool kalman_controllable(const Partition& p) {
    int nf = p.F.rows();
    int l = p.R.cols();
    RatMatrix C(nf, nf * l);
    IntMatrix block = p.R;
    for (int k = 0; k < nf; ++k) {
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < l; ++j) C(i, k * l + j) = Rational(block(i, j));
        if (k + 1 < nf) block = p.F * block;
    }
    return rational_rank(C) == nf;
}

std::pair<bool, IntegerPolynomial> shared_eigenvalue_test(const Graph& g, const std::vector<int>& leaders) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "graph must be connected");
    Partition p = follower_partition(g, leaders);
    IntegerPolynomial gcd = poly_gcd(char_poly(p.F), char_poly(laplacian(g)));
    return {gcd.degree() >= 1, gcd};
}

namespace {

std::vector<int> support_of(const std::vector<FieldElement>& y) {
    std::vector<int> s;
    for (size_t i = 0; i < y.size(); ++i)
        if (!y[i].is_zero()) s.push_back(static_cast<int>(i));
    return s;
}

// lambda and the eigenspace field for one irreducible factor: rational for
// degree 1, Q[x]/(f) otherwise.
FieldElement factor_eigenvalue(const IntegerPolynomial& f) {
    if (f.degree() == 1) return FieldElement(Rational(-f.c[0]) / Rational(f.c[1]));
    return FieldElement::generator(make_field(f));
}

// Null space of (L - lambda*I) constrained to y_i = 0 on `pinned`.
std::vector<std::vector<FieldElement>> pinned_eigenspace(const IntMatrix& L, const FieldElement& lambda,
                                                         const std::vector<int>& pinned) {
    int n = L.rows();
    Matrix<FieldElement> M(n + static_cast<int>(pinned.size()), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            M(i, j) = FieldElement(L(i, j));
            if (i == j) M(i, j) -= lambda;
        }
    for (size_t r = 0; r < pinned.size(); ++r) M(n + static_cast<int>(r), pinned[r]) = FieldElement(1);
    return null_space(M);
}

} // namespace

std::vector<EigCertificate> leader_vanishing_eigenvectors(const Graph& g, const std::vector<int>& leaders) {
    auto [shared, gcd] = shared_eigenvalue_test(g, leaders);
    std::vector<EigCertificate> certs;
    if (!shared) return certs;

    IntMatrix L = laplacian(g);
    std::vector<IntegerPolynomial> factors = detail::factor(gcd, 16);
    std::vector<IntegerPolynomial> seen;
    for (const auto& f : factors) {
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue; // repeated factor, same eigenspace
        seen.push_back(f);
        FieldElement lambda = factor_eigenvalue(f);
        auto basis = pinned_eigenspace(L, lambda, leaders);
        if (basis.empty()) continue;
        EigCertificate cert;
        cert.eigenvalue = lambda;
        cert.vec = basis.front();
        cert.support = support_of(cert.vec);
        if (cert.support.empty() || !verify_eigenpair(L, cert.eigenvalue, cert.vec))
            fail(ErrorCode::InconsistentTests, "certificate failed exact re-verification");
        for (int v : leaders)
            if (!cert.vec[v].is_zero()) fail(ErrorCode::InconsistentTests, "certificate nonzero on a leader");
        certs.push_back(std::move(cert));
    }
    return certs;
}

std::vector<FieldElement> eigencondition_residual(const Graph& g, const FieldElement& lambda,
                                                  const std::vector<FieldElement>& y) {
    if (static_cast<int>(y.size()) != g.n) fail(ErrorCode::DimensionMismatch, "vector length != vertex count");
    std::vector<FieldElement> res(g.n, FieldElement(0));
    for (int k = 0; k < g.n; ++k) {
        FieldElement acc = FieldElement(g.degree(k)) * y[k] - lambda * y[k];
        for (int i = 0; i < g.n; ++i)
            if (g.has_edge(k, i)) acc -= y[i];
        res[k] = acc;
    }
    return res;
}

ControllabilityReport controllability_report(const Graph& g, const std::vector<int>& leaders) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "graph must be connected");
    Partition p = follower_partition(g, leaders);

    ControllabilityReport rep;
    rep.graph = g;
    rep.leaders = p.leaders;
    rep.kalmanControllable = kalman_controllable(p);
    auto [shared, gcd] = shared_eigenvalue_test(g, leaders);
    rep.sharedEigenvalueFound = shared;
    rep.gcdPoly = gcd;
    rep.certificates = leader_vanishing_eigenvectors(g, leaders);

    // Exact cross-checks; any violation is a bug, not a tolerance case.
    // Kalman rank and witness extraction are equivalent for every leader
    // set; a shared eigenvalue is necessary for uncontrollability, and for
    // a single leader it is also sufficient.
    if (rep.certificates.empty() != rep.kalmanControllable)
        fail(ErrorCode::InconsistentTests, "certificate extraction disagrees with the Kalman verdict");
    if (!rep.sharedEigenvalueFound && !rep.kalmanControllable)
        fail(ErrorCode::InconsistentTests, "uncontrollable but F and L share no eigenvalue");
    if (rep.leaders.size() == 1 && rep.sharedEigenvalueFound == rep.kalmanControllable)
        fail(ErrorCode::InconsistentTests, "single-leader eigenvalue test disagrees with the Kalman verdict");
    return rep;
}

std::string serialize_report(const ControllabilityReport& r) {
    std::ostringstream os;
    os << "netctrl.report.v1\n";
    os << "kind: controllability\n";
    os << "n: " << r.graph.n << "\n";
    os << "edges:";
    for (auto [u, v] : r.graph.edges()) os << " " << (u + 1) << "-" << (v + 1);
    os << "\n";
    os << "leaders:";
    for (int v : r.leaders) os << " " << (v + 1);
    os << "\n";
    os << "kalman_controllable: " << (r.kalmanControllable ? "true" : "false") << "\n";
    os << "shared_eigenvalue_found: " << (r.sharedEigenvalueFound ? "true" : "false") << "\n";
    os << "char_gcd: " << poly_str(r.gcdPoly) << "\n";
    os << "verdict: " << (r.kalmanControllable ? "CONTROLLABLE" : "UNCONTROLLABLE") << "\n";
    os << "certificates: " << r.certificates.size() << "\n";
    for (size_t i = 0; i < r.certificates.size(); ++i) {
        const EigCertificate& c = r.certificates[i];
        os << "certificate " << (i + 1) << ":\n";
        os << "  eigenvalue: " << c.eigenvalue.str() << "\n";
        os << "  modulus: "
           << (c.eigenvalue.field() ? poly_str(c.eigenvalue.field()->modulus()) : std::string("(rational)")) << "\n";
        os << "  vector: [";
        for (size_t j = 0; j < c.vec.size(); ++j) {
            if (j) os << ", ";
            os << c.vec[j].str();
        }
        os << "]\n";
        os << "  support:";
        for (int v : c.support) os << " " << (v + 1);
        os << "\n";
    }
    return os.str();
}

} // namespace netctrl
