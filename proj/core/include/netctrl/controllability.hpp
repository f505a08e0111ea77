#ifndef NETCTRL_CONTROLLABILITY_HPP
#define NETCTRL_CONTROLLABILITY_HPP

#include <netctrl/field.hpp>
#include <netctrl/graph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace netctrl {

// An exact uncontrollability witness: a Laplacian eigenvector that vanishes
// on every leader coordinate.
struct EigCertificate {
    FieldElement eigenvalue;
    std::vector<FieldElement> vec; // full length n, zero at every leader
    std::vector<int> support;      // 0-based vertices with nonzero entry, ascending
};

// The verdict is kalmanControllable, always witnessed: uncontrollable
// reports carry at least one certificate, controllable reports none.
// sharedEigenvalueFound records the spectral screen: it is necessary for
// uncontrollability (so false forces a controllable verdict), and for a
// single leader it is equivalent to it; with two or more leaders the
// spectra may intersect while every such eigenvector is nonzero somewhere
// on the leader set.
struct ControllabilityReport {
    Graph graph;
    std::vector<int> leaders; // 0-based, ascending
    bool kalmanControllable = false;
    bool sharedEigenvalueFound = false;
    IntegerPolynomial gcdPoly;
    std::vector<EigCertificate> certificates;
};

// rank [R | FR | ... | F^(nf-1) R] == nf, by exact rational elimination.
bool kalman_controllable(const Partition& p);

// (deg gcd(char F, char L) >= 1, the gcd). True iff F and L share an
// eigenvalue: necessary for uncontrollability, equivalent to it for a
// single leader.
std::pair<bool, IntegerPolynomial> shared_eigenvalue_test(const Graph& g, const std::vector<int>& leaders);

// One certificate per irreducible factor of gcd(char F, char L) whose
// eigenspace meets {y : y_i = 0 for all leaders i} nontrivially; empty
// iff controllable.
std::vector<EigCertificate> leader_vanishing_eigenvectors(const Graph& g, const std::vector<int>& leaders);

// Per-node residual d_k*y_k - sum_{i in N_k} y_i - lambda*y_k; the all-zero
// vector iff (lambda, y) is an eigenpair. Reports which node's condition fails.
std::vector<FieldElement> eigencondition_residual(const Graph& g, const FieldElement& lambda,
                                                  const std::vector<FieldElement>& y);

// Runs both tests, extracts certificates, and enforces their agreement
// (disagreement between the two exact tests is an internal bug, reported
// as InconsistentTests).
ControllabilityReport controllability_report(const Graph& g, const std::vector<int>& leaders);

// Structured text, versioned header, byte-stable for identical inputs.
std::string serialize_report(const ControllabilityReport& r);

} // namespace netctrl

#endif
