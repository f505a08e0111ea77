#ifndef NETCTRL_VERIFIER_HPP
#define NETCTRL_VERIFIER_HPP

#include <netctrl/destructive.hpp>
#include <netctrl/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace netctrl {

// Sweeps that tie the structural certificates (pairs, triples, quads) to
// the exact controllability oracles, exhaustively on small graphs and
// sampled above that. A correct build reports zero counterexamples; any
// failure is captured with enough data to replay it.

// One failed instance: the graph, the vertex set the claim quantified
// over (a leader set or a candidate node set, 0-based), and what broke.
struct Counterexample {
    Graph graph;
    std::vector<int> vertices;
    std::string details;
};

// Outcome of one sweep. agreements + counterexamples.size() always equals
// instanceCount. elapsedSeconds never enters the serialized report, so
// identical inputs produce identical bytes.
struct VerificationRun {
    std::string claim; // suite token: prop1 | t1 | t2 | fact1 | t4
    long long instanceCount = 0;
    long long agreements = 0;
    std::vector<Counterexample> counterexamples; // sorted for determinism
    double elapsedSeconds = 0.0;
    std::string notes; // deterministic secondary tallies
};

inline constexpr uint64_t kDefaultVerifySeed = 42;

// Every connected graph of size n (2 <= n <= 5 exhaustive; n = 6 or 7
// samples `sampleCount` graphs from the seed) crossed with every nonempty
// proper leader set. Checks, per instance: the Kalman verdict matches the
// certificate list exactly; a clean spectral screen forces a controllable
// verdict; and for a single leader the screen alone decides. WrongSize
// outside 2..7.
VerificationRun verify_prop1(int n, uint64_t seed = kDefaultVerifySeed, int sampleCount = 200);

// Every connected graph of size n (2..5) crossed with every vertex pair:
// some nonempty leader set avoiding the pair controls the system iff the
// pair carries no two-node certificate. The primary reading lets leader
// sets be any nonempty subset; the single-leader reading is tallied in
// notes. WrongSize outside 2..5.
VerificationRun verify_t1(int n);

// Every connected graph of size n (4 or 5) crossed with every vertex
// triple: some nonempty leader set avoiding the triple controls the
// system iff the triple carries no three-node certificate and none of its
// pairs carries a two-node one. Single-leader reading tallied in notes.
// WrongSize otherwise.
VerificationRun verify_t2(int n);

// Every connected graph of size n (3..5 exhaustive; n = 6 samples
// `sampleCount` graphs, at least 10000 by default) crossed with every
// vertex triple: an eigenvector supported exactly on the triple exists
// iff the triple classifies into one of the four certified shapes, with
// matching eigenvalue. WrongSize outside 3..6.
VerificationRun verify_fact1(int n, uint64_t seed = kDefaultVerifySeed, int sampleCount = 10000);

// All 728 connected five-vertex graphs, each single leader: the Kalman
// verdict is controllable iff the followers carry no pair certificate, no
// triple certificate, and no quad certificate rooted at the leader.
VerificationRun verify_t4(const QcdCatalog& catalog);

// Structured text, versioned header, byte-stable for identical inputs
// (timing is deliberately omitted). Vertices print 1-based.
std::string serialize_run(const VerificationRun& run);

} // namespace netctrl

#endif
