#include <netctrl/verifier.hpp>

#include <netctrl/controllability.hpp>
#include <netctrl/error.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

namespace netctrl {

namespace {

using Clock = std::chrono::steady_clock;

// connected labeled graph counts, indexed by n; guards the enumerator
constexpr long long kConnectedCounts[6] = {0, 0, 1, 4, 38, 728};

void sweep_exhaustive(int n, const std::function<void(const Graph&)>& visit) {
    long long seen = 0;
    enumerate_connected_graphs(n, [&](const Graph& g) {
        ++seen;
        visit(g);
    });
    if (n <= 5 && seen != kConnectedCounts[n])
        fail(ErrorCode::InconsistentTests,
             "enumerator yielded " + std::to_string(seen) + " graphs at n = " + std::to_string(n) +
                 ", expected " + std::to_string(kConnectedCounts[n]));
}

std::string set_str(const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vs[i] + 1);
    }
    return s;
}

void finish(VerificationRun& run, Clock::time_point t0) {
    run.agreements = run.instanceCount - static_cast<long long>(run.counterexamples.size());
    std::sort(run.counterexamples.begin(), run.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  const std::string ah = canonical_form(a.graph).hex();
                  const std::string bh = canonical_form(b.graph).hex();
                  if (ah != bh) return ah < bh;
                  if (a.vertices != b.vertices) return a.vertices < b.vertices;
                  return a.details < b.details;
              });
    run.elapsedSeconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

// first nonempty subset of pool whose leader choice controls the system;
// singletons only when askSingles
std::optional<std::vector<int>> controllable_leader_set(const Graph& g,
                                                        const std::vector<int>& pool,
                                                        bool askSingles) {
    for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
        if (askSingles && (mask & (mask - 1))) continue;
        std::vector<int> leaders;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask & (1u << i)) leaders.push_back(pool[i]);
        if (kalman_controllable(follower_partition(g, leaders))) return leaders;
    }
    return std::nullopt;
}

std::vector<int> complement_of(const Graph& g, std::initializer_list<int> held) {
    std::vector<int> pool;
    for (int v = 0; v < g.n; ++v)
        if (std::find(held.begin(), held.end(), v) == held.end()) pool.push_back(v);
    return pool;
}

// the three relations the spectral screen, the verdict, and the
// certificate list must satisfy on every instance
std::string prop1_defects(const Graph& g, const std::vector<int>& leaders) {
    const bool kalman = kalman_controllable(follower_partition(g, leaders));
    const bool shared = shared_eigenvalue_test(g, leaders).first;
    const bool haveCert = !leader_vanishing_eigenvectors(g, leaders).empty();
    std::string bad;
    if (kalman != !haveCert)
        bad += std::string("verdict is ") + (kalman ? "controllable" : "uncontrollable") +
               " yet leader-vanishing certificates are " + (haveCert ? "present" : "absent") + "; ";
    if (!shared && !kalman) bad += "no shared eigenvalue yet the verdict is uncontrollable; ";
    if (leaders.size() == 1 && shared == kalman)
        bad += std::string("single leader: shared eigenvalue ") + (shared ? "found" : "missing") +
               " must decide the verdict; ";
    if (!bad.empty()) bad.erase(bad.size() - 2);
    return bad;
}

} // namespace

VerificationRun verify_prop1(int n, uint64_t seed, int sampleCount) {
    if (n < 2 || n > 7)
        fail(ErrorCode::WrongSize, "prop1 sweep covers sizes 2..7, got " + std::to_string(n));
    const auto t0 = Clock::now();
    VerificationRun run;
    run.claim = "prop1";
    long long singles = 0, multis = 0;

    const auto visit = [&](const Graph& g) {
        const unsigned full = (1u << n) - 1;
        for (unsigned mask = 1; mask < full; ++mask) {
            std::vector<int> leaders;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) leaders.push_back(v);
            ++run.instanceCount;
            ++(leaders.size() == 1 ? singles : multis);
            const std::string bad = prop1_defects(g, leaders);
            if (!bad.empty()) run.counterexamples.push_back({g, leaders, bad});
        }
    };

    if (n <= 5) {
        sweep_exhaustive(n, visit);
    } else {
        Rng rng(seed);
        for (int i = 0; i < sampleCount; ++i) visit(random_connected_graph(n, rng));
    }
    run.notes = "single-leader instances " + std::to_string(singles) + ", multi-leader instances " +
                std::to_string(multis);
    finish(run, t0);
    return run;
}

VerificationRun verify_t1(int n) {
    if (n < 2 || n > 5)
        fail(ErrorCode::WrongSize, "t1 sweep covers sizes 2..5, got " + std::to_string(n));
    const auto t0 = Clock::now();
    VerificationRun run;
    run.claim = "t1";
    long long singleAgree = 0;

    sweep_exhaustive(n, [&](const Graph& g) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                ++run.instanceCount;
                const bool blocked = is_dcd_pair(g, p, q).has_value();
                const std::vector<int> pool = complement_of(g, {p, q});
                const auto any = controllable_leader_set(g, pool, false);
                const auto single = controllable_leader_set(g, pool, true);
                if (single.has_value() == !blocked) ++singleAgree;
                if (any.has_value() != !blocked) {
                    std::string d = std::string("pair certificate ") +
                                    (blocked ? "present" : "absent") + ", yet " +
                                    (any ? "leader set {" + set_str(*any) + "} controls"
                                         : "no leader subset avoiding the pair controls");
                    run.counterexamples.push_back({g, {p, q}, d});
                }
            }
    });
    run.notes = "single-leader reading agrees on " + std::to_string(singleAgree) + " of " +
                std::to_string(run.instanceCount) + " instances";
    finish(run, t0);
    return run;
}

VerificationRun verify_t2(int n) {
    if (n != 4 && n != 5)
        fail(ErrorCode::WrongSize, "t2 sweep covers sizes 4 and 5, got " + std::to_string(n));
    const auto t0 = Clock::now();
    VerificationRun run;
    run.claim = "t2";
    long long singleAgree = 0;

    sweep_exhaustive(n, [&](const Graph& g) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                for (int r = q + 1; r < n; ++r) {
                    ++run.instanceCount;
                    const bool tripleHit = classify_tcd_triple(g, p, q, r).has_value();
                    const bool pairHit = is_dcd_pair(g, p, q).has_value() ||
                                         is_dcd_pair(g, p, r).has_value() ||
                                         is_dcd_pair(g, q, r).has_value();
                    const bool blocked = tripleHit || pairHit;
                    const std::vector<int> pool = complement_of(g, {p, q, r});
                    const auto any = controllable_leader_set(g, pool, false);
                    const auto single = controllable_leader_set(g, pool, true);
                    if (single.has_value() == !blocked) ++singleAgree;
                    if (any.has_value() != !blocked) {
                        std::string d = std::string("triple certificate ") +
                                        (tripleHit ? "present" : "absent") +
                                        ", pair certificate " + (pairHit ? "present" : "absent") +
                                        ", yet " +
                                        (any ? "leader set {" + set_str(*any) + "} controls"
                                             : "no leader subset avoiding the triple controls");
                        run.counterexamples.push_back({g, {p, q, r}, d});
                    }
                }
    });
    run.notes = "single-leader reading agrees on " + std::to_string(singleAgree) + " of " +
                std::to_string(run.instanceCount) + " instances";
    finish(run, t0);
    return run;
}

namespace {

// eigenvector with no zero coordinate, for the support-is-everything case
// the pinned search cannot serve
std::optional<SupportWitness> full_support_witness(const LaplacianEigenspaces& eig, int n) {
    for (size_t fi = 0; fi < eig.factors().size(); ++fi) {
        const auto& W = eig.eigenspace(static_cast<int>(fi));
        bool dead = false;
        for (int v = 0; v < n && !dead; ++v) {
            bool nz = false;
            for (const auto& w : W)
                if (!w[v].is_zero()) {
                    nz = true;
                    break;
                }
            dead = !nz;
        }
        if (dead) continue;
        const long bound = static_cast<long>(n) * (static_cast<long>(W.size()) - 1) + 1;
        for (long tval = 1; tval <= bound; ++tval) {
            std::vector<FieldElement> y(n, FieldElement(0));
            FieldElement weight(1);
            const FieldElement step{Integer(tval)};
            for (const auto& w : W) {
                for (int v = 0; v < n; ++v)
                    if (!w[v].is_zero()) y[v] += weight * w[v];
                weight *= step;
            }
            bool full = true;
            for (int v = 0; v < n; ++v)
                if (y[v].is_zero()) {
                    full = false;
                    break;
                }
            if (full) return SupportWitness{eig.eigenvalue(static_cast<int>(fi)), std::move(y)};
        }
    }
    return std::nullopt;
}

std::string fact1_defect(const Graph& g, const LaplacianEigenspaces& eig, int p, int q, int r) {
    const std::vector<int> support{p, q, r};
    const auto witness = static_cast<int>(support.size()) == g.n
                             ? full_support_witness(eig, g.n)
                             : eig.support_witness(support);
    const auto cert = classify_tcd_triple(g, p, q, r);
    if (witness.has_value() != cert.has_value())
        return std::string("eigenvector supported on the triple ") +
               (witness ? "exists" : "does not exist") + " yet the shape classification " +
               (cert ? "succeeds" : "fails");
    if (witness && cert) {
        const FieldElement& lam = witness->eigenvalue;
        if (!lam.is_rational() || lam.as_rational() != Rational(cert->eigenvalue))
            return "witness eigenvalue " + lam.str() + " differs from the classified " +
                   cert->eigenvalue.get_str();
    }
    return {};
}

} // namespace

VerificationRun verify_fact1(int n, uint64_t seed, int sampleCount) {
    if (n < 3 || n > 6)
        fail(ErrorCode::WrongSize, "fact1 sweep covers sizes 3..6, got " + std::to_string(n));
    const auto t0 = Clock::now();
    VerificationRun run;
    run.claim = "fact1";
    long long eigenInstances = 0;

    const auto visit = [&](const Graph& g) {
        const LaplacianEigenspaces eig(g);
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                for (int r = q + 1; r < n; ++r) {
                    ++run.instanceCount;
                    const std::string bad = fact1_defect(g, eig, p, q, r);
                    if (!bad.empty()) {
                        run.counterexamples.push_back({g, {p, q, r}, bad});
                    } else if (classify_tcd_triple(g, p, q, r)) {
                        ++eigenInstances;
                    }
                }
    };

    if (n <= 5) {
        sweep_exhaustive(n, visit);
    } else {
        Rng rng(seed);
        for (int i = 0; i < sampleCount; ++i) visit(random_connected_graph(n, rng));
    }
    run.notes = "triples carrying an eigenvector: " + std::to_string(eigenInstances);
    finish(run, t0);
    return run;
}

VerificationRun verify_t4(const QcdCatalog& catalog) {
    const auto t0 = Clock::now();
    VerificationRun run;
    run.claim = "t4";
    long long pairHits = 0, tripleHits = 0, quadHits = 0, uncontrollable = 0;

    sweep_exhaustive(5, [&](const Graph& g) {
        const auto pairs = all_dcd_pairs(g);
        const auto triples = all_tcd_triples(g);
        const auto quads = qcd_quads_5(g, catalog);
        for (int leader = 0; leader < 5; ++leader) {
            ++run.instanceCount;
            bool pairHit = false;
            for (const auto& c : pairs) pairHit = pairHit || (c.p != leader && c.q != leader);
            bool tripleHit = false;
            for (const auto& c : triples)
                tripleHit = tripleHit || (c.p != leader && c.q != leader && c.r != leader);
            bool quadHit = false;
            for (const auto& c : quads) quadHit = quadHit || (c.k == leader);
            const bool kalman = kalman_controllable(follower_partition(g, {leader}));
            pairHits += pairHit;
            tripleHits += tripleHit;
            quadHits += quadHit;
            uncontrollable += !kalman;
            if (kalman != !(pairHit || tripleHit || quadHit)) {
                std::string d = std::string("verdict ") +
                                (kalman ? "controllable" : "uncontrollable") + " vs certificates:" +
                                (pairHit ? " pair" : "") + (tripleHit ? " triple" : "") +
                                (quadHit ? " quad" : "") +
                                (!pairHit && !tripleHit && !quadHit ? " none" : "");
                run.counterexamples.push_back({g, {leader}, d});
            }
        }
    });
    run.notes = "pair hits " + std::to_string(pairHits) + ", triple hits " +
                std::to_string(tripleHits) + ", quad hits " + std::to_string(quadHits) +
                ", uncontrollable " + std::to_string(uncontrollable);
    finish(run, t0);
    return run;
}

std::string serialize_run(const VerificationRun& run) {
    std::ostringstream os;
    os << "netctrl.verification.v1\n";
    os << "claim: " << run.claim << "\n";
    os << "instances: " << run.instanceCount << "\n";
    os << "agreements: " << run.agreements << "\n";
    os << "counterexamples: " << run.counterexamples.size() << "\n";
    os << "notes: " << run.notes << "\n";
    for (const auto& c : run.counterexamples) {
        os << "counterexample: n=" << c.graph.n << " edges";
        for (auto [u, v] : c.graph.edges()) os << " " << (u + 1) << "-" << (v + 1);
        os << " set " << set_str(c.vertices) << " :: " << c.details << "\n";
    }
    return os.str();
}

} // namespace netctrl
