#ifndef NETCTRL_DESTRUCTIVE_HPP
#define NETCTRL_DESTRUCTIVE_HPP

#include <netctrl/field.hpp>
#include <netctrl/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace netctrl {

// Node sets whose removal-style symmetry pins a Laplacian eigenvector to
// zero everywhere else. A single leader placed outside such a set can
// never steer the network: the eigenvector survives grounding.

// Pair certificate: every other vertex sees both of p,q or neither, so
// y = e_p - e_q is an exact eigenvector. Eigenvalue is d_p + 1 when the
// pair is adjacent, d_p otherwise (d_p == d_q is forced).
struct DcdCertificate {
    int p = 0, q = 0; // 0-based, p < q
    bool adjacentPair = false;
    Integer eigenvalue;
    std::vector<Rational> vec; // full length n: +1 at p, -1 at q
};

// None when the pair fails the both-or-neither test. SameVertex /
// IndexOutOfRange / DisconnectedGraph on bad input.
std::optional<DcdCertificate> is_dcd_pair(const Graph& g, int p, int q);

// All pairs, ascending (p, q).
std::vector<DcdCertificate> all_dcd_pairs(const Graph& g);

// Triple certificates, classed by the edges the triple induces:
//   I   triangle                 y = ( 1,  1, -2), lambda = d_p + 1
//   II  path, center p           y = (-2,  1,  1), lambda = d_p + 1
//   III single edge {p, q}       y = ( 1,  1, -2), lambda = d_r
//   IV  no edges                 y = ( 1,  1, -2), lambda = d_r
// Roles are canonical: II puts the path center first and sorts the ends;
// III sorts the edge endpoints and puts the isolated vertex last; I and IV
// sort all three. The more-connected shapes (one vertex adjacent to the
// other two plus an extra edge, etc.) cannot satisfy the outside condition
// together with connectivity, so four classes are exhaustive.
enum class TcdClass { I, II, III, IV };

std::string tcd_class_str(TcdClass c);

struct TcdCertificate {
    int p = 0, q = 0, r = 0; // 0-based, canonical role order
    TcdClass topologyClass = TcdClass::I;
    Integer eigenvalue;
    std::vector<Rational> vec; // full length n, zero outside {p,q,r}
};

// None unless every outside vertex is adjacent to all three or none of
// them (that alone forces the degree pattern each class needs).
// DuplicateVertex / IndexOutOfRange / DisconnectedGraph on bad input.
std::optional<TcdCertificate> classify_tcd_triple(const Graph& g, int p, int q, int r);

// All triples, ascending by sorted vertex set.
std::vector<TcdCertificate> all_tcd_triples(const Graph& g);

// An eigenvector supported exactly on a prescribed vertex set, over the
// smallest field that can host it.
struct SupportWitness {
    FieldElement eigenvalue;
    std::vector<FieldElement> vec; // full length n, nonzero exactly on the support
};

// Exact eigenspace decomposition of one graph's Laplacian, cached so many
// support queries against the same graph factor the matrix once.
class LaplacianEigenspaces {
public:
    // DisconnectedGraph unless g is connected.
    explicit LaplacianEigenspaces(const Graph& g);

    const Graph& graph() const { return g_; }

    // Distinct irreducible factors of char(L), ascending (degree, then
    // coefficients from the leading term down).
    const std::vector<IntegerPolynomial>& factors() const { return factors_; }

    // Root of factor i, as a rational when degree 1, else the generator
    // of Q[x]/(factor i).
    const FieldElement& eigenvalue(int i) const { return lambdas_[i]; }

    // Basis of the eigenspace of eigenvalue(i), full length-n vectors.
    const std::vector<std::vector<FieldElement>>& eigenspace(int i) const { return bases_[i]; }

    // An eigenvector that is zero outside `support` and nonzero on every
    // vertex of it, or none when no eigenvalue admits one. Factors are
    // tried in order, so equal inputs yield the same witness.
    // EmptySupport when the support is empty or omits no vertex;
    // DuplicateVertex / IndexOutOfRange on bad entries.
    std::optional<SupportWitness> support_witness(const std::vector<int>& support) const;

private:
    Graph g_;
    std::vector<IntegerPolynomial> factors_;
    std::vector<FieldElement> lambdas_;
    std::vector<std::vector<std::vector<FieldElement>>> bases_;
};

// One-shot wrapper: build the decomposition for g and run one query.
std::optional<SupportWitness> eigenvector_support_search(const Graph& g, const std::vector<int>& support);

// Four-vertex certificate on five-vertex graphs: the quad carries an
// eigenvector vanishing only at the remaining vertex k, so k is the one
// leader placement this eigenvalue defeats.
struct QcdCertificate {
    std::array<int, 4> quad{}; // ascending
    int k = 0;                 // the excluded vertex
    FieldElement eigenvalue;
    std::vector<FieldElement> vec; // full length 5, zero exactly at k
    CanonicalCode catalogCode;     // canonical form of (graph, k)
};

// The finite list of rooted five-vertex graphs (root = the excluded
// vertex) whose quad supports such an eigenvector, derived by exhaustive
// search with every instance certified exactly.
struct QcdCatalog {
    std::vector<CanonicalCode> entries; // ascending
    std::vector<std::string> derivationLog;

    bool contains(const CanonicalCode& code) const;
};

// Sweeps all connected 5-vertex graphs and all five root choices; logs one
// line per distinct rooted class plus the structural cross-checks run on
// every hit. InconsistentTests if any internal check fails.
QcdCatalog derive_qcd_catalog();

// Versioned text form (header, then one hex code per line); parse_catalog
// inverts it. ParseError on malformed input.
std::string serialize_catalog(const QcdCatalog& c);
QcdCatalog parse_catalog(const std::string& text);

// All quad certificates of a 5-vertex connected graph: for each root k the
// catalog lookup and the eigenspace oracle must agree (InconsistentTests
// otherwise), and each hit is returned with its exact witness.
// WrongSize unless n == 5.
std::vector<QcdCertificate> qcd_quads_5(const Graph& g, const QcdCatalog& catalog);

// Degree-arithmetic screens for the star quad: when the four-vertex set
// induces a 3-star (center s1), an eigenvector on it forces one exact
// relation among full-graph degrees, depending on how the outside vertex
// k attaches. Evaluated over the integers, no floating point; a vanishing
// denominator counts as Violated (the relation it encodes is 1/0-free by
// construction when the configuration is realizable).
enum class ScreenStatus { Satisfied, Violated, NotApplicable };

// k adjacent to all four: 1/(d_t2-d_s1-1) + 1/(d_t1-d_s1-1) + 1/(d_s2-d_s1-1) = -1.
ScreenStatus star_quad_harmonic(const Integer& ds1, const Integer& ds2,
                                const Integer& dt1, const Integer& dt2);

// k adjacent to s1, s2, t1 only: the quadratics
//   x^2 - (d_t1+d_s2+2)x + ((d_t1+1)(d_s2+1) - 1)   and
//   x^2 - (d_s1+d_t2+1)x + (d_s1*d_t2 + d_t2 - 1)
// share a root. Decided exactly: rational roots compare as rationals,
// irrational ones by matching trace and radicand.
ScreenStatus star_quad_surd_equality(const Integer& ds1, const Integer& ds2,
                                     const Integer& dt1, const Integer& dt2);

// k adjacent to s1, s2 only: d_s1 - d_s2 = 1/(d_t1-d_s2-1) + 1/(d_t2-d_s2-1).
ScreenStatus star_quad_balance(const Integer& ds1, const Integer& ds2,
                               const Integer& dt1, const Integer& dt2);

// Role assignment for the screens: s1 the star center, s2/t1/t2 leaves,
// k the outside vertex. The five must be a permutation of 0..4.
struct StarQuadRoles {
    int s1 = 0, s2 = 0, t1 = 0, t2 = 0, k = 0;
};

struct ScreenReport {
    char situation = '-'; // 'a' k~all four, 'b' k~{s1,s2,t1}, 'c' k~{s1,s2}
    ScreenStatus harmonicIdentity = ScreenStatus::NotApplicable;
    ScreenStatus surdEquality = ScreenStatus::NotApplicable;
    ScreenStatus degreeBalance = ScreenStatus::NotApplicable;
    std::string note;
};

// Applies whichever screen the attachment pattern selects. WrongSize
// unless n == 5; DuplicateVertex / IndexOutOfRange on bad roles;
// WrongTopology unless the quad induces exactly the 3-star centered s1.
ScreenReport lemma3_screen(const Graph& g, const StarQuadRoles& roles);

} // namespace netctrl

#endif
