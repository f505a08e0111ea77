#ifndef NETCTRL_DESIGNER_HPP
#define NETCTRL_DESIGNER_HPP

#include <netctrl/graph.hpp>
#include <netctrl/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace netctrl {

// Builds graphs of any size that carry a four-vertex eigenvector by
// construction: two anchor vertices p, q, a source pair {s1, s2}, a target
// pair {t1, t2}, and a free remainder. The vector +1 on the sources and -1
// on the targets is an exact Laplacian eigenvector with eigenvalue
// sigma + 4, where sigma counts the outside vertices adjacent to all four
// pair members - so any leader set avoiding the two pairs loses.

// How a pair member attaches to the anchors and to the opposite pair:
// an Anchored vertex is adjacent to both anchors and to exactly one
// opposite vertex (the Floating one); a Floating vertex is adjacent to
// neither anchor and to both opposite vertices. Each pair must contain
// exactly one of each - that is what gives the anchors one neighbor per
// pair and cancels the eigenvector there.
enum class PairOption { Anchored, Floating };

struct QcdDesignSpec {
    int n = 0; // total vertices, at least 7

    // Distinct role vertices, 0-based.
    int p = 0, q = 0;
    int s1 = 0, s2 = 0;
    int t1 = 0, t2 = 0;

    PairOption s1Option = PairOption::Anchored;
    PairOption s2Option = PairOption::Floating;
    PairOption t1Option = PairOption::Anchored;
    PairOption t2Option = PairOption::Floating;

    // Which source and target each anchor claims as its neighbor; must
    // name the Anchored member of each pair (the edge set already forces
    // this, the fields make the intent checkable).
    int pAttachS = 0, pAttachT = 0;
    int qAttachS = 0, qAttachT = 0;

    bool sPairEdge = false; // edge s1-s2
    bool tPairEdge = false; // edge t1-t2
    bool pqEdge = false;    // edge p-q

    // Outside vertices adjacent to all four pair members; the rest touch
    // none of them. sigma is this list's size.
    std::vector<int> omegaQuadNeighbors;
    // Edges from outside vertices to the anchors; each outside vertex
    // must take both anchors or neither.
    std::vector<std::pair<int, int>> omegaPqEdges;
    // Free edges among the outside vertices.
    std::vector<std::pair<int, int>> omegaInternalEdges;
};

// A broken constraint: `rule` is a short machine-checkable tag (size,
// roles, pair-option, anchor-adjacency, outside-quad-edges,
// outside-anchor-edges, outside-internal-edges, connectivity), `detail`
// names the vertices involved.
struct DesignViolation {
    std::string rule;
    std::string detail;
};

// Empty iff the spec satisfies every construction rule and the assembled
// graph is connected. Violations are data, never exceptions.
std::vector<DesignViolation> validate_design(const QcdDesignSpec& spec);

struct DesignOutput {
    Graph graph;
    std::vector<Rational> eta; // +1 sources, -1 targets, zero elsewhere
    Integer eigenvalue;        // sigma + 4
};

// Assembles the graph and proves the eigenpair exactly before returning.
// InvalidSpec (carrying the violation list) when validation fails.
DesignOutput build_design(const QcdDesignSpec& spec);

// Deterministic sampled spec: role placement, options, flags and outside
// edges are drawn from the seed, then patched to connectivity; the result
// always validates. InvalidSpec for n < 7, ExhaustedRetries if sampling
// keeps failing validation.
QcdDesignSpec random_design(int n, uint64_t seed);

// Versioned structured text (1-based vertex labels); parse_design_spec
// inverts it, ParseError on malformed input. Lists are normalized to
// ascending order, so serialize(parse(s)) == s for canonical s.
std::string serialize_design_spec(const QcdDesignSpec& spec);
QcdDesignSpec parse_design_spec(const std::string& text);

} // namespace netctrl

#endif
