#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <netctrl/controllability.hpp>
#include <netctrl/designer.hpp>
#include <netctrl/error.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace netctrl;

namespace {

// nine vertices, two outside vertices on the quad (so eigenvalue 6), one
// dangling outside vertex chained behind them
QcdDesignSpec nine_vertex_spec() {
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
    spec.omegaQuadNeighbors = {6, 7};
    spec.omegaInternalEdges = {{7, 8}};
    return spec;
}

// seven vertices, source chord present, no quad-adjacent outside vertex
QcdDesignSpec seven_vertex_chord_spec() {
    QcdDesignSpec spec;
    spec.n = 7;
    spec.p = 0;
    spec.q = 1;
    spec.s1 = 2;
    spec.s2 = 3;
    spec.t1 = 4;
    spec.t2 = 5;
    spec.s1Option = PairOption::Anchored;
    spec.s2Option = PairOption::Floating;
    spec.t1Option = PairOption::Anchored;
    spec.t2Option = PairOption::Floating;
    spec.pAttachS = spec.qAttachS = 2;
    spec.pAttachT = spec.qAttachT = 4;
    spec.sPairEdge = true;
    spec.omegaPqEdges = {{6, 0}, {6, 1}};
    return spec;
}

bool has_violation(const std::vector<DesignViolation>& vs, const std::string& rule,
                   const std::string& needle) {
    return std::any_of(vs.begin(), vs.end(), [&](const DesignViolation& v) {
        return v.rule == rule && v.detail.find(needle) != std::string::npos;
    });
}

// every nonempty leader set avoiding the quad leaves the system stuck
void check_quad_avoiding_leaders_fail(const Graph& g, const QcdDesignSpec& spec) {
    std::vector<int> rest;
    for (int v = 0; v < spec.n; ++v)
        if (v != spec.s1 && v != spec.s2 && v != spec.t1 && v != spec.t2) rest.push_back(v);
    REQUIRE(rest.size() <= 6);
    for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
        std::vector<int> leaders;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1u << i)) leaders.push_back(rest[i]);
        CAPTURE(mask);
        CHECK_FALSE(kalman_controllable(follower_partition(g, leaders)));
    }
}

} // namespace

TEST_CASE("nine-vertex reconstruction pins the designed eigenpair") {
    const QcdDesignSpec spec = nine_vertex_spec();
    CHECK(validate_design(spec).empty());

    const DesignOutput out = build_design(spec);
    CHECK(out.eigenvalue == 6);

    const std::vector<Rational> want = {Rational(0),  Rational(1),  Rational(0),
                                        Rational(1),  Rational(-1), Rational(-1),
                                        Rational(0),  Rational(0),  Rational(0)};
    CHECK(out.eta == want);

    const Graph& g = out.graph;
    // anchors take the anchored member of each pair, nothing else
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(2, 4));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(2, 5));
    CHECK_FALSE(g.has_edge(0, 2));
    // anchored-anchored is the one absent cross edge
    CHECK_FALSE(g.has_edge(1, 4));
    CHECK(g.has_edge(1, 5));
    CHECK(g.has_edge(3, 4));
    CHECK(g.has_edge(3, 5));
    // both listed outside vertices take the whole quad
    for (int w : {6, 7})
        for (int m : {1, 3, 4, 5}) CHECK(g.has_edge(w, m));
    CHECK(g.has_edge(7, 8));
    CHECK(g.degree(8) == 1);

    // degree bookkeeping: anchored pair members sit one above the floating
    CHECK(g.degree(1) == 5);
    CHECK(g.degree(3) == 4);
    CHECK(g.degree(4) == 5);
    CHECK(g.degree(5) == 4);

    check_quad_avoiding_leaders_fail(g, spec);
}

TEST_CASE("one quad neighbor drops the eigenvalue to five") {
    QcdDesignSpec spec = nine_vertex_spec();
    spec.omegaQuadNeighbors = {6};
    spec.omegaInternalEdges = {{6, 7}, {7, 8}};
    CHECK(validate_design(spec).empty());
    const DesignOutput out = build_design(spec);
    CHECK(out.eigenvalue == 5);
    CHECK(out.graph.degree(1) == 4);
    CHECK(out.graph.degree(3) == 3);
    check_quad_avoiding_leaders_fail(out.graph, spec);
}

TEST_CASE("source chord shifts degrees but not the eigenvalue") {
    const QcdDesignSpec spec = seven_vertex_chord_spec();
    CHECK(validate_design(spec).empty());
    const DesignOutput out = build_design(spec);
    CHECK(out.eigenvalue == 4); // no quad neighbors outside
    const Graph& g = out.graph;
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(4, 5));
    CHECK(g.degree(2) == 4); // anchored + chord
    CHECK(g.degree(3) == 3); // floating + chord
    CHECK(g.degree(4) == 3); // anchored, no chord
    CHECK(g.degree(5) == 2); // floating, no chord
    check_quad_avoiding_leaders_fail(g, spec);
}

TEST_CASE("both chords and the anchor edge coexist") {
    QcdDesignSpec spec = seven_vertex_chord_spec();
    spec.tPairEdge = true;
    spec.pqEdge = true;
    spec.omegaQuadNeighbors = {6};
    spec.omegaPqEdges.clear();
    CHECK(validate_design(spec).empty());
    const DesignOutput out = build_design(spec);
    CHECK(out.eigenvalue == 5);
    CHECK(out.graph.has_edge(4, 5));
    CHECK(out.graph.has_edge(0, 1));
    check_quad_avoiding_leaders_fail(out.graph, spec);
}

TEST_CASE("outside vertices may take both anchors on top of the quad") {
    QcdDesignSpec spec = nine_vertex_spec();
    spec.omegaPqEdges = {{6, 0}, {6, 2}};
    CHECK(validate_design(spec).empty());
    const DesignOutput out = build_design(spec);
    CHECK(out.eigenvalue == 6);
    CHECK(out.graph.degree(6) == 6);
    check_quad_avoiding_leaders_fail(out.graph, spec);
}

TEST_CASE("validation names the broken rule and the vertices") {
    SUBCASE("anchored vertex missing one anchor") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.qAttachS = 3; // q walks away from the anchored s1
        const auto vs = validate_design(spec);
        CHECK(has_violation(vs, "anchor-adjacency", "s1"));
        CHECK(has_violation(vs, "anchor-adjacency", "adjacent to p only"));
    }
    SUBCASE("outside vertex adjacent to part of the quad") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaInternalEdges.push_back({8, 1}); // vertex 9 reaches s1 only
        const auto vs = validate_design(spec);
        CHECK(has_violation(vs, "outside-quad-edges", "adjacent to s1"));
        CHECK(has_violation(vs, "outside-quad-edges", "but not"));
    }
    SUBCASE("both pair members anchored") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.s2Option = PairOption::Anchored;
        CHECK(has_violation(validate_design(spec), "pair-option", "exactly one of s1, s2"));
    }
    SUBCASE("both pair members floating") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.t1Option = PairOption::Floating;
        CHECK(has_violation(validate_design(spec), "pair-option", "exactly one of t1, t2"));
    }
    SUBCASE("too few vertices") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.n = 6;
        CHECK(has_violation(validate_design(spec), "size", "at least 7"));
    }
    SUBCASE("too many vertices") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.n = 65;
        CHECK(has_violation(validate_design(spec), "size", "64"));
    }
    SUBCASE("duplicate role") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.t2 = spec.s1;
        CHECK(has_violation(validate_design(spec), "roles", "both name vertex 2"));
    }
    SUBCASE("role out of range") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.q = 9;
        CHECK(has_violation(validate_design(spec), "roles", "q"));
    }
    SUBCASE("attachment outside its pair") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.pAttachS = 4; // a target, not a source
        CHECK(has_violation(validate_design(spec), "anchor-adjacency", "not in the source pair"));
    }
    SUBCASE("outside vertex reaching one anchor") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaPqEdges = {{8, 0}};
        const auto vs = validate_design(spec);
        CHECK(has_violation(vs, "outside-anchor-edges", "vertex 9"));
        CHECK(has_violation(vs, "outside-anchor-edges", "only"));
    }
    SUBCASE("free edge between roles") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaInternalEdges.push_back({1, 4});
        CHECK(has_violation(validate_design(spec), "outside-internal-edges",
                            "joins two role vertices"));
    }
    SUBCASE("quad neighbor repeated") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaQuadNeighbors = {6, 6};
        CHECK(has_violation(validate_design(spec), "outside-quad-edges", "listed twice"));
    }
    SUBCASE("quad neighbor that is a role") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaQuadNeighbors = {6, 0};
        CHECK(has_violation(validate_design(spec), "outside-quad-edges", "role vertex"));
    }
    SUBCASE("quad edges smuggled through the free list") {
        QcdDesignSpec spec = nine_vertex_spec();
        for (int m : {1, 3, 4, 5}) spec.omegaInternalEdges.push_back({8, m});
        CHECK(has_violation(validate_design(spec), "outside-quad-edges",
                            "list it as a quad neighbor"));
    }
    SUBCASE("disconnected remainder") {
        QcdDesignSpec spec = nine_vertex_spec();
        spec.omegaInternalEdges.clear(); // vertex 9 floats free
        CHECK(has_violation(validate_design(spec), "connectivity", "vertex 9"));
    }
    SUBCASE("a compliant spec yields no violations") {
        CHECK(validate_design(nine_vertex_spec()).empty());
    }
}

TEST_CASE("build refuses an invalid spec and carries the violations") {
    QcdDesignSpec spec = nine_vertex_spec();
    spec.s2Option = PairOption::Anchored;
    try {
        build_design(spec);
        FAIL("expected InvalidSpec");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSpec);
        CHECK(std::string(e.what()).find("pair-option") != std::string::npos);
    }
}

TEST_CASE("sampled designs validate, build, and stay uncontrollable off the quad") {
    for (uint64_t seed = 1; seed <= 24; ++seed) {
        const int n = 7 + static_cast<int>(seed % 6); // 7..12
        CAPTURE(seed);
        CAPTURE(n);
        const QcdDesignSpec spec = random_design(n, seed);
        CHECK(validate_design(spec).empty());
        const DesignOutput out = build_design(spec);
        CHECK(out.eigenvalue == Integer(static_cast<int>(spec.omegaQuadNeighbors.size()) + 4));

        Rational sum(0);
        int support = 0;
        for (const Rational& e : out.eta) {
            sum += e;
            if (e != 0) ++support;
        }
        CHECK(sum == 0);
        CHECK(support == 4);

        if (n <= 9) check_quad_avoiding_leaders_fail(out.graph, spec);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    CHECK(serialize_design_spec(random_design(9, 42)) ==
          serialize_design_spec(random_design(9, 42)));
    const QcdDesignSpec a = random_design(7, 7);
    CHECK(build_design(a).eigenvalue ==
          Integer(static_cast<int>(a.omegaQuadNeighbors.size()) + 4));
}

TEST_CASE("sampling rejects impossible sizes") {
    expect_error(ErrorCode::InvalidSpec, [] { random_design(6, 1); });
    expect_error(ErrorCode::InvalidSpec, [] { random_design(65, 1); });
}

TEST_CASE("spec text round trips") {
    const QcdDesignSpec spec = nine_vertex_spec();
    const std::string text = serialize_design_spec(spec);
    CHECK(text.find("netctrl.design-spec.v1\n") == 0);
    CHECK(text.find("p: 1\n") != std::string::npos);
    CHECK(text.find("s1-option: anchored\n") != std::string::npos);
    CHECK(text.find("outside-quad-neighbors: 7 8\n") != std::string::npos);
    CHECK(text.find("outside-internal-edges: 8-9\n") != std::string::npos);

    const QcdDesignSpec back = parse_design_spec(text);
    CHECK(serialize_design_spec(back) == text);
    CHECK(build_design(back).graph == build_design(spec).graph);

    for (uint64_t seed = 1; seed <= 10; ++seed) {
        const QcdDesignSpec s = random_design(8, seed);
        const std::string t = serialize_design_spec(s);
        CHECK(serialize_design_spec(parse_design_spec(t)) == t);
        CHECK(build_design(parse_design_spec(t)).graph == build_design(s).graph);
    }
}

TEST_CASE("spec text serialization is normalized") {
    QcdDesignSpec spec = nine_vertex_spec();
    spec.omegaQuadNeighbors = {7, 6};
    spec.omegaInternalEdges = {{8, 7}};
    const std::string text = serialize_design_spec(spec);
    CHECK(text.find("outside-quad-neighbors: 7 8\n") != std::string::npos);
    CHECK(text.find("outside-internal-edges: 8-9\n") != std::string::npos);
}

TEST_CASE("malformed spec text is rejected") {
    const std::string good = serialize_design_spec(nine_vertex_spec());
    auto reject = [](const std::string& text) {
        expect_error(ErrorCode::ParseError, [&] { parse_design_spec(text); });
    };

    reject("netctrl.design-spec.v2\nn: 9\n");
    reject("");
    reject("netctrl.design-spec.v1\n");                       // ends before n
    reject(good + "extra: 1\n");                              // trailing line
    std::string swapped = good;
    swapped.replace(swapped.find("p: 1"), 4, "r: 1");          // wrong key
    reject(swapped);
    std::string badInt = good;
    badInt.replace(badInt.find("n: 9"), 4, "n: 9x");
    reject(badInt);
    std::string zeroVertex = good;
    zeroVertex.replace(zeroVertex.find("p: 1"), 4, "p: 0");    // 1-based floor
    reject(zeroVertex);
    std::string badOption = good;
    badOption.replace(badOption.find("anchored"), 8, "anchores");
    reject(badOption);
    std::string badFlag = good;
    badFlag.replace(badFlag.find(": no"), 4, ": eh");
    reject(badFlag);
    std::string badAttach = good;
    badAttach.replace(badAttach.find("p-attach: 2 5"), 13, "p-attach: 2");
    reject(badAttach);
    std::string badEdge = good;
    badEdge.replace(badEdge.find("8-9"), 3, "8_9");
    reject(badEdge);
    std::string halfEdge = good;
    halfEdge.replace(halfEdge.find("8-9"), 3, "8-");
    reject(halfEdge);
}
