// Acceptance gate: one line per criterion, PASS only when the check and its
// runtime budget both hold. Exit code is the number of failed criteria.

#include <netctrl/controllability.hpp>
#include <netctrl/designer.hpp>
#include <netctrl/destructive.hpp>
#include <netctrl/error.hpp>
#include <netctrl/field.hpp>
#include <netctrl/graph.hpp>
#include <netctrl/verifier.hpp>

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace netctrl;

namespace {

std::vector<FieldElement> lift(const std::vector<Rational>& v) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.emplace_back(r);
    return out;
}

bool residual_zero(const Graph& g, const FieldElement& lambda, const std::vector<FieldElement>& y) {
    for (const FieldElement& r : eigencondition_residual(g, lambda, y))
        if (!r.is_zero()) return false;
    return true;
}

// Nine-vertex instance with anchors 1,3, source pair 2/4, target pair 5/6
// (2 and 5 anchored), and sigma quad-adjacent outside vertices; the
// remaining outside vertices attach without touching the quad.
QcdDesignSpec nine_vertex_spec(int sigma) {
    QcdDesignSpec spec;
    spec.n = 9;
    spec.p = 0;
    spec.q = 2;
    spec.s1 = 1;
    spec.s2 = 3;
    spec.t1 = 4;
    spec.t2 = 5;
    spec.s1Option = PairOption::Anchored;
    spec.s2Option = PairOption::Floating;
    spec.t1Option = PairOption::Anchored;
    spec.t2Option = PairOption::Floating;
    spec.pAttachS = spec.qAttachS = 1;
    spec.pAttachT = spec.qAttachT = 4;
    if (sigma == 2) {
        spec.omegaQuadNeighbors = {6, 7};
        spec.omegaInternalEdges = {{7, 8}};
    } else {
        spec.omegaQuadNeighbors = {6};
        spec.omegaPqEdges = {{7, 0}, {7, 2}};
        spec.omegaInternalEdges = {{7, 8}};
    }
    return spec;
}

bool crit1_example_pair(std::string& detail) {
    struct Shape {
        int sigma;
        int lambda;
        std::vector<Rational> published; // the eigenvector listed with the instance
    };
    Rational h(1, 2);
    std::vector<Shape> shapes = {
        {2, 6, {0, -h, 0, -h, h, h, 0, 0, 0}},
        {1, 5, {0, h, 0, h, -h, -h, 0, 0, 0}},
    };
    std::ostringstream note;
    for (const Shape& s : shapes) {
        DesignOutput built = build_design(nine_vertex_spec(s.sigma));
        if (built.eigenvalue != s.lambda) {
            detail = "designed eigenvalue is " + built.eigenvalue.get_str() + ", wanted " +
                     std::to_string(s.lambda);
            return false;
        }
        FieldElement lambda{built.eigenvalue};
        if (!residual_zero(built.graph, lambda, lift(built.eta))) {
            detail = "designed eta fails the eigen-condition at lambda=" + std::to_string(s.lambda);
            return false;
        }
        if (!residual_zero(built.graph, lambda, lift(s.published))) {
            detail = "published half-unit eta fails at lambda=" + std::to_string(s.lambda);
            return false;
        }
        if (note.tellp() > 0) note << ", ";
        note << "sigma=" << s.sigma << " -> lambda=" << s.lambda;
    }
    detail = "both nine-vertex instances verify exactly (" + note.str() +
             "), designed and half-unit eigenvectors alike";
    return true;
}

bool crit2_pinned_witness(std::string& detail) {
    Graph g = graph_from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    std::vector<int> degrees;
    for (int v = 0; v < 5; ++v) degrees.push_back(g.degree(v));
    if (degrees != std::vector<int>{4, 4, 2, 2, 2}) {
        detail = "reconstruction has the wrong degree sequence";
        return false;
    }
    std::vector<Rational> y = {0, -3, 1, 1, 1};
    if (!residual_zero(g, FieldElement(5), lift(y))) {
        detail = "[0,-3,1,1,1] is not an exact eigenvector at lambda=5";
        return false;
    }
    detail = "[0,-3,1,1,1] verifies exactly at lambda=5 on the (4,4,2,2,2) graph";
    return true;
}

bool crit3_single_leader_equivalence(std::string& detail) {
    VerificationRun run = verify_t4(derive_qcd_catalog());
    detail = std::to_string(run.instanceCount) + " instances, " +
             std::to_string(run.counterexamples.size()) + " counterexamples (" + run.notes + ")";
    return run.counterexamples.empty() && run.instanceCount == 728 * 5;
}

bool crit4_rank_vs_gcd(std::string& detail) {
    long long instances = 0;
    for (int n = 2; n <= 5; ++n) {
        VerificationRun run = verify_prop1(n);
        if (!run.counterexamples.empty()) {
            detail = "n=" + std::to_string(n) + ": " +
                     std::to_string(run.counterexamples.size()) + " disagreements";
            return false;
        }
        instances += run.instanceCount;
    }
    detail = std::to_string(instances) +
             " (graph, leader-set) instances agree across the rank and gcd tests";
    return instances == 2 + 24 + 532 + 21840;
}

bool crit5_leader_existence(std::string& detail) {
    std::string alongside;
    for (int n = 2; n <= 5; ++n) {
        VerificationRun run = verify_t1(n);
        if (!run.counterexamples.empty()) {
            detail = "pair suite n=" + std::to_string(n) + " has counterexamples";
            return false;
        }
        if (n == 5) alongside += "pair n=5: " + run.notes;
    }
    for (int n = 4; n <= 5; ++n) {
        VerificationRun run = verify_t2(n);
        if (!run.counterexamples.empty()) {
            detail = "triple suite n=" + std::to_string(n) + " has counterexamples";
            return false;
        }
        if (n == 5) alongside += "; triple n=5: " + run.notes;
    }
    detail = "any-subset reading clean on every size; " + alongside;
    return true;
}

bool crit6_forbidden_shapes(std::string& detail) {
    long long instances = 0;
    for (int n = 3; n <= 5; ++n) {
        VerificationRun run = verify_fact1(n);
        if (!run.counterexamples.empty()) {
            detail = "exhaustive n=" + std::to_string(n) + " found a forbidden-shape witness";
            return false;
        }
        instances += run.instanceCount;
    }
    VerificationRun sampled = verify_fact1(6, kDefaultVerifySeed, 10000);
    if (!sampled.counterexamples.empty()) {
        detail = "sampled n=6 found a forbidden-shape witness";
        return false;
    }
    detail = std::to_string(instances) + " exhaustive triples (n<=5) plus " +
             std::to_string(sampled.instanceCount) + " sampled at n=6, no forbidden shape";
    return instances == 4 + 152 + 7280 && sampled.instanceCount == 10000 * 20;
}

bool crit7_catalog_consistency(std::string& detail) {
    QcdCatalog first = derive_qcd_catalog();
    QcdCatalog second = derive_qcd_catalog();
    if (serialize_catalog(first) != serialize_catalog(second)) {
        detail = "two derivations serialized differently";
        return false;
    }

    long long mismatches = 0, hits = 0;
    enumerate_connected_graphs(5, [&](const Graph& g) {
        LaplacianEigenspaces eig(g);
        for (int k = 0; k < 5; ++k) {
            std::vector<int> support;
            for (int v = 0; v < 5; ++v)
                if (v != k) support.push_back(v);
            bool oracle = eig.support_witness(support).has_value();
            bool catalogued = first.contains(canonical_form(g, k));
            if (oracle != catalogued) ++mismatches;
            if (oracle) ++hits;
        }
    });
    if (mismatches != 0) {
        detail = std::to_string(mismatches) + " of 3640 rooted instances disagree with the oracle";
        return false;
    }

    size_t classes = first.entries.size();
    if (classes != 15) {
        // Documented discrepancy path: the derivation stands on its own
        // exhaustive sweep; the expected decomposition is 11 + 2 + 2.
        detail = "catalog has " + std::to_string(classes) +
                 " rooted classes where the documented decomposition 11+2+2 gives 15; "
                 "derivation log retained for review";
        return false;
    }
    detail = "regeneration byte-identical; oracle agrees on all 3640 rooted instances (" +
             std::to_string(hits) + " hits); 15 classes match the 11+2+2 decomposition";
    return true;
}

bool crit8_designer_sweep(std::string& detail) {
    int designs = 0, leaderSets = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 7 + (i % 6);
        uint64_t seed = 1000 + static_cast<uint64_t>(i);
        QcdDesignSpec spec = random_design(n, seed);
        DesignOutput built = build_design(spec);
        if (built.eigenvalue != Integer(static_cast<long>(spec.omegaQuadNeighbors.size()) + 4)) {
            detail = "seed " + std::to_string(seed) + ": eigenvalue is not sigma+4";
            return false;
        }
        if (!residual_zero(built.graph, FieldElement(built.eigenvalue), lift(built.eta))) {
            detail = "seed " + std::to_string(seed) + ": eta fails the eigen-condition";
            return false;
        }
        ++designs;

        std::vector<int> pool;
        uint64_t quad = (uint64_t(1) << spec.s1) | (uint64_t(1) << spec.s2) |
                        (uint64_t(1) << spec.t1) | (uint64_t(1) << spec.t2);
        for (int v = 0; v < n; ++v)
            if (!((quad >> v) & 1u)) pool.push_back(v);
        Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);
        for (int trial = 0; trial < 20; ++trial) {
            uint64_t mask = rng.below((uint64_t(1) << pool.size()) - 1) + 1;
            std::vector<int> leaders;
            for (size_t b = 0; b < pool.size(); ++b)
                if ((mask >> b) & 1u) leaders.push_back(pool[b]);
            if (kalman_controllable(follower_partition(built.graph, leaders))) {
                detail = "seed " + std::to_string(seed) + ": a quad-avoiding leader set controls";
                return false;
            }
            ++leaderSets;
        }
    }
    detail = std::to_string(designs) + " designs verified, " + std::to_string(leaderSets) +
             " quad-avoiding leader sets all uncontrollable";
    return designs == 200 && leaderSets == 4000;
}

bool crit9_certificate_formulas(std::string& detail) {
    long long pairs = 0, triples = 0;
    std::string defect;
    for (int n = 2; n <= 5 && defect.empty(); ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g) {
            if (!defect.empty()) return;
            for (const DcdCertificate& c : all_dcd_pairs(g)) {
                Integer expect(g.degree(c.p) + (c.adjacentPair ? 1 : 0));
                bool shape = true;
                for (int v = 0; v < g.n; ++v) {
                    Rational want = v == c.p ? Rational(1) : v == c.q ? Rational(-1) : Rational(0);
                    shape = shape && c.vec[static_cast<size_t>(v)] == want;
                }
                if (g.degree(c.p) != g.degree(c.q) || c.eigenvalue != expect || !shape ||
                    !residual_zero(g, FieldElement(c.eigenvalue), lift(c.vec))) {
                    defect = "pair certificate broken on an n=" + std::to_string(n) + " graph";
                    return;
                }
                ++pairs;
            }
            for (const TcdCertificate& c : all_tcd_triples(g)) {
                int dp = g.degree(c.p), dq = g.degree(c.q), dr = g.degree(c.r);
                bool pq = g.has_edge(c.p, c.q), pr = g.has_edge(c.p, c.r),
                     qr = g.has_edge(c.q, c.r);
                bool ok = false;
                switch (c.topologyClass) {
                    case TcdClass::I:
                        ok = pq && pr && qr && dp == dq && dq == dr && c.eigenvalue == Integer(dp + 1);
                        break;
                    case TcdClass::II:
                        ok = pq && pr && !qr && dq == dr && dq == dp - 1 &&
                             c.eigenvalue == Integer(dp + 1);
                        break;
                    case TcdClass::III:
                        ok = pq && !pr && !qr && dp == dq && dp == dr + 1 &&
                             c.eigenvalue == Integer(dr);
                        break;
                    case TcdClass::IV:
                        ok = !pq && !pr && !qr && dp == dq && dq == dr &&
                             c.eigenvalue == Integer(dr);
                        break;
                }
                int negativeAt = c.topologyClass == TcdClass::II ? c.p : c.r;
                for (int v = 0; v < g.n; ++v) {
                    Rational want = v == negativeAt ? Rational(-2)
                                    : (v == c.p || v == c.q || v == c.r) ? Rational(1)
                                                                         : Rational(0);
                    ok = ok && c.vec[static_cast<size_t>(v)] == want;
                }
                if (!ok || !residual_zero(g, FieldElement(c.eigenvalue), lift(c.vec))) {
                    defect = "triple certificate broken on an n=" + std::to_string(n) + " graph";
                    return;
                }
                ++triples;
            }
        });
    }
    if (!defect.empty()) {
        detail = defect;
        return false;
    }
    detail = std::to_string(pairs) + " pair and " + std::to_string(triples) +
             " triple certificates all satisfy their eigenvalue formulas and degree identities";
    return true;
}

struct Criterion {
    int index;
    const char* title;
    double budgetSeconds; // 0 = no stated budget
    std::function<bool(std::string&)> check;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "nine-vertex design pair reproduces exactly", 1.0, crit1_example_pair},
        {2, "pinned five-vertex witness verifies exactly", 1.0, crit2_pinned_witness},
        {3, "single-leader verdict equals the certificate screen on all 728x5", 30.0,
         crit3_single_leader_equivalence},
        {4, "rank test and char-poly gcd test agree on every n<=5 leader set", 300.0,
         crit4_rank_vs_gcd},
        {5, "leader-existence equivalences hold exhaustively at n<=5", 300.0,
         crit5_leader_existence},
        {6, "no support-3 eigenvector induces a forbidden shape (n<=5 + sampled n=6)", 120.0,
         crit6_forbidden_shapes},
        {7, "quad catalog regenerates byte-identically and matches the oracle", 0.0,
         crit7_catalog_consistency},
        {8, "200 sampled designs verify and defeat 20 leader sets each", 120.0,
         crit8_designer_sweep},
        {9, "every pair/triple certificate obeys its formula table", 0.0,
         crit9_certificate_formulas},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool inBudget = c.budgetSeconds == 0.0 || elapsed <= c.budgetSeconds;
        if (ok && !inBudget) detail += " — but over the runtime budget";
        bool pass = ok && inBudget;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.index << ": " << c.title
                  << " — " << detail << " [" << std::fixed << std::setprecision(2) << elapsed
                  << "s";
        if (c.budgetSeconds > 0.0)
            std::cout << ", budget " << std::setprecision(0) << c.budgetSeconds << "s";
        std::cout << "]\n";
        if (!pass) ++failures;
    }
    std::cout << "acceptance: " << (9 - failures) << " of 9 criteria pass\n";
    return failures;
}
