#include <doctest.h>
#include <netctrl/error.hpp>
#include <netctrl/graph.hpp>
#include <netctrl/io.hpp>

#include <string>
#include <vector>

using namespace netctrl;

namespace {

Graph p3() { return graph_from_edges(3, {{1, 2}, {2, 3}}); }

Graph twin_hub_5() {
    return graph_from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Expects a ParseError whose message names the given line.
void check_reject(const std::string& text, const std::string& needle) {
    try {
        parse_edge_list(text);
        FAIL("accepted: ", text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

} // namespace

TEST_CASE("edge list serializes in ascending order") {
    CHECK(serialize_edge_list(p3()) == "3 2\n1 2\n2 3\n");
    CHECK(serialize_edge_list(graph_from_edges(1, {})) == "1 0\n");
    CHECK(serialize_edge_list(twin_hub_5()) ==
          "5 7\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
}

TEST_CASE("edge list round trips") {
    std::vector<Graph> fixtures = {p3(), twin_hub_5(), graph_from_edges(1, {}),
                                   graph_from_edges(2, {{1, 2}}),
                                   graph_from_edges(4, {{1, 2}, {3, 4}})};
    Rng rng(7);
    for (int n : {6, 9, 12, 30, 64}) fixtures.push_back(random_connected_graph(n, rng));
    for (const Graph& g : fixtures) {
        Graph back = parse_edge_list(serialize_edge_list(g));
        CHECK(back == g);
    }
}

TEST_CASE("parser ignores comments, blank lines, and loose whitespace") {
    std::string text =
        "# path on three vertices\n"
        "\n"
        "  3   2\t\n"
        "   # edges follow\n"
        "\t1\t2\n"
        "\n"
        " 2 3 \n"
        "# trailing remark\n"
        "\n";
    CHECK(parse_edge_list(text) == p3());

    // No trailing newline on the last edge.
    CHECK(parse_edge_list("3 2\n1 2\n2 3") == p3());
    // Windows line endings.
    CHECK(parse_edge_list("3 2\r\n1 2\r\n2 3\r\n") == p3());
    // Reversed endpoint order is the same edge.
    CHECK(parse_edge_list("3 2\n2 1\n3 2\n") == p3());
}

TEST_CASE("parser rejects malformed input with line numbers") {
    check_reject("", "line 1: missing header");
    check_reject("# only a comment\n\n", "line 1: missing header");
    check_reject("3\n", "line 1: header must be 'n m'");
    check_reject("3 2 9\n1 2\n2 3\n", "line 1: header must be 'n m'");
    check_reject("x 2\n1 2\n2 3\n", "line 1: vertex count 'x'");
    check_reject("0 0\n", "line 1: vertex count 0 out of range 1..64");
    check_reject("65 0\n", "line 1: vertex count 65 out of range 1..64");
    check_reject("3 -1\n", "line 1: edge count -1 out of range 0..3");
    check_reject("3 4\n1 2\n2 3\n1 3\n1 3\n", "line 1: edge count 4 out of range 0..3");
    check_reject("3 2\n1 2\n", "line 2: expected 2 edge lines, found only 1");
    check_reject("3 2\n1 2\n2 3\n1 3\n", "line 4: unexpected content after 2 edges");
    check_reject("3 2\n1 2 3\n2 3\n", "line 2: edge must be 'u v'");
    check_reject("3 2\n1\n2 3\n", "line 2: edge must be 'u v'");
    check_reject("3 2\n1 a\n2 3\n", "line 2: vertex 'a'");
    check_reject("3 2\n1 4\n2 3\n", "line 2: vertex 4 out of range 1..3");
    check_reject("3 2\n0 2\n2 3\n", "line 2: vertex 0 out of range 1..3");
    check_reject("3 2\n2 2\n2 3\n", "line 2: self-loop 2-2");
    check_reject("3 2\n1 2\n2 1\n", "line 3: duplicate edge 2-1");
    // Comment lines still count toward the reported position.
    check_reject("# header next\n3 2\n# now the edges\n1 2\n2 1\n", "line 5: duplicate edge");
}

TEST_CASE("dot export emits structure-only text without annotations") {
    CHECK(export_dot(p3()) ==
          "graph netctrl {\n"
          "  v1 [label=\"1\"];\n"
          "  v2 [label=\"2\"];\n"
          "  v3 [label=\"3\"];\n"
          "  v1 -- v2;\n"
          "  v2 -- v3;\n"
          "}\n");
    CHECK(export_dot(p3(), DotAnnotations{}) == export_dot(p3()));
}

TEST_CASE("dot export marks leaders, shaded sets, and value labels") {
    DotAnnotations a;
    a.leaders = {0};
    a.shaded = {1, 2, 3, 4};
    a.valueLabels = {"0", "-3", "1", "1", "1"};
    std::string dot = export_dot(twin_hub_5(), a);
    CHECK(dot ==
          "graph netctrl {\n"
          "  v1 [label=\"1: 0\", shape=square];\n"
          "  v2 [label=\"2: -3\", style=filled, fillcolor=gray80];\n"
          "  v3 [label=\"3: 1\", style=filled, fillcolor=gray80];\n"
          "  v4 [label=\"4: 1\", style=filled, fillcolor=gray80];\n"
          "  v5 [label=\"5: 1\", style=filled, fillcolor=gray80];\n"
          "  v1 -- v2;\n"
          "  v1 -- v3;\n"
          "  v1 -- v4;\n"
          "  v1 -- v5;\n"
          "  v2 -- v3;\n"
          "  v2 -- v4;\n"
          "  v2 -- v5;\n"
          "}\n");

    // A vertex that is both leader and shaded carries both attribute sets.
    DotAnnotations both;
    both.leaders = {1};
    both.shaded = {1};
    std::string mixed = export_dot(p3(), both);
    CHECK(mixed.find("v2 [label=\"2\", shape=square, style=filled, fillcolor=gray80];") !=
          std::string::npos);
}

TEST_CASE("dot export escapes quotes and backslashes in labels") {
    DotAnnotations a;
    a.valueLabels = {"a\"b", "c\\d", "e"};
    std::string dot = export_dot(p3(), a);
    CHECK(dot.find("v1 [label=\"1: a\\\"b\"];") != std::string::npos);
    CHECK(dot.find("v2 [label=\"2: c\\\\d\"];") != std::string::npos);
}

TEST_CASE("dot export validates annotations") {
    CHECK_THROWS_AS(export_dot(p3(), DotAnnotations{{3}, {}, {}}), Error);
    CHECK_THROWS_AS(export_dot(p3(), DotAnnotations{{}, {-1}, {}}), Error);
    CHECK_THROWS_AS(export_dot(p3(), DotAnnotations{{}, {}, {"1", "2"}}), Error);
    try {
        export_dot(p3(), DotAnnotations{{}, {}, {"1", "2"}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongSize);
    }
}
