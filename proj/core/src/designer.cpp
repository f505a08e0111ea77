#include <netctrl/designer.hpp>

#include <netctrl/error.hpp>
#include <netctrl/field.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace netctrl {

namespace {

std::string vtx(int v) { return std::to_string(v + 1); }

bool anchored(PairOption o) { return o == PairOption::Anchored; }

struct RoleView {
    std::array<int, 6> at;         // p q s1 s2 t1 t2
    std::array<const char*, 6> id; // printable role names

    explicit RoleView(const QcdDesignSpec& s)
        : at{s.p, s.q, s.s1, s.s2, s.t1, s.t2},
          id{"p", "q", "s1", "s2", "t1", "t2"} {}

    bool is_role(int v) const {
        return std::find(at.begin(), at.end(), v) != at.end();
    }
    bool in_quad(int v) const {
        return std::find(at.begin() + 2, at.end(), v) != at.end();
    }
    bool is_anchor(int v) const { return v == at[0] || v == at[1]; }
    // printable name of a role vertex, e.g. "s1 (vertex 2)"
    std::string name(int v) const {
        for (int i = 0; i < 6; ++i)
            if (at[i] == v) return std::string(id[i]) + " (vertex " + vtx(v) + ")";
        return "vertex " + vtx(v);
    }
};

// Every edge the role structure dictates, 0-based. Callers guarantee the
// options are one-Anchored-one-Floating per pair.
std::vector<std::pair<int, int>> role_edges(const QcdDesignSpec& spec) {
    const int as = anchored(spec.s1Option) ? spec.s1 : spec.s2;
    const int fs = anchored(spec.s1Option) ? spec.s2 : spec.s1;
    const int at = anchored(spec.t1Option) ? spec.t1 : spec.t2;
    const int ft = anchored(spec.t1Option) ? spec.t2 : spec.t1;
    std::vector<std::pair<int, int>> e = {
        {spec.p, as}, {spec.q, as}, {spec.p, at}, {spec.q, at},
        // the anchored vertex takes the floating one across, the floating
        // vertex takes both; three cross edges, never anchored-anchored
        {as, ft}, {fs, at}, {fs, ft},
    };
    if (spec.sPairEdge) e.emplace_back(spec.s1, spec.s2);
    if (spec.tPairEdge) e.emplace_back(spec.t1, spec.t2);
    if (spec.pqEdge) e.emplace_back(spec.p, spec.q);
    return e;
}

Graph assemble(const QcdDesignSpec& spec) {
    std::vector<std::pair<int, int>> edges = role_edges(spec);
    for (int w : spec.omegaQuadNeighbors) {
        edges.emplace_back(w, spec.s1);
        edges.emplace_back(w, spec.s2);
        edges.emplace_back(w, spec.t1);
        edges.emplace_back(w, spec.t2);
    }
    edges.insert(edges.end(), spec.omegaPqEdges.begin(), spec.omegaPqEdges.end());
    edges.insert(edges.end(), spec.omegaInternalEdges.begin(), spec.omegaInternalEdges.end());
    for (auto& [u, v] : edges) { ++u; ++v; }
    return graph_from_edges(spec.n, edges);
}

std::string join_names(const RoleView& roles, const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += i + 1 == vs.size() ? " and " : ", ";
        out += roles.name(vs[i]);
    }
    return out;
}

} // namespace

std::vector<DesignViolation> validate_design(const QcdDesignSpec& spec) {
    std::vector<DesignViolation> out;
    auto flag = [&](const char* rule, std::string detail) {
        out.push_back({rule, std::move(detail)});
    };

    if (spec.n < 7) {
        flag("size", "need at least 7 vertices (six roles plus one outside vertex), got " +
                         std::to_string(spec.n));
        return out;
    }
    if (spec.n > 64) {
        flag("size", "vertex count " + std::to_string(spec.n) + " exceeds the graph cap of 64");
        return out;
    }

    const RoleView roles(spec);
    bool rolesOk = true;
    for (int i = 0; i < 6; ++i) {
        if (roles.at[i] < 0 || roles.at[i] >= spec.n) {
            flag("roles", std::string(roles.id[i]) + " = vertex " + vtx(roles.at[i]) +
                              " is outside 1.." + std::to_string(spec.n));
            rolesOk = false;
        }
    }
    for (int i = 0; i < 6 && rolesOk; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (roles.at[i] == roles.at[j]) {
                flag("roles", std::string(roles.id[i]) + " and " + roles.id[j] +
                                  " both name vertex " + vtx(roles.at[i]));
                rolesOk = false;
            }
    if (!rolesOk) return out;

    // each pair carries exactly one anchored vertex, so the anchors end up
    // with exactly one neighbor per pair and the eigenvector cancels there
    const bool sOne = anchored(spec.s1Option) != anchored(spec.s2Option);
    const bool tOne = anchored(spec.t1Option) != anchored(spec.t2Option);
    if (!sOne)
        flag("pair-option", "exactly one of s1, s2 must take the anchored option; both are " +
                                std::string(anchored(spec.s1Option) ? "anchored" : "floating"));
    if (!tOne)
        flag("pair-option", "exactly one of t1, t2 must take the anchored option; both are " +
                                std::string(anchored(spec.t1Option) ? "anchored" : "floating"));

    struct Attach {
        const char* anchor;
        int claimed;
        int lo, hi; // the pair it must come from
        const char* pairName;
    };
    const std::array<Attach, 4> attaches{{
        {"p", spec.pAttachS, spec.s1, spec.s2, "source"},
        {"p", spec.pAttachT, spec.t1, spec.t2, "target"},
        {"q", spec.qAttachS, spec.s1, spec.s2, "source"},
        {"q", spec.qAttachT, spec.t1, spec.t2, "target"},
    }};
    bool attachDomainOk = true;
    for (const auto& a : attaches)
        if (a.claimed != a.lo && a.claimed != a.hi) {
            flag("anchor-adjacency", std::string(a.anchor) + " attaches vertex " + vtx(a.claimed) +
                                         ", which is not in the " + a.pairName + " pair");
            attachDomainOk = false;
        }
    const auto checkAnchoredReach = [&](int anchoredVtx, int pAttach, int qAttach) {
        const bool viaP = pAttach == anchoredVtx;
        const bool viaQ = qAttach == anchoredVtx;
        if (viaP && viaQ) return;
        const std::string reach = viaP ? "p only" : viaQ ? "q only" : "neither anchor";
        flag("anchor-adjacency", roles.name(anchoredVtx) +
                                     " takes the anchored option but is adjacent to " + reach +
                                     "; an anchored vertex needs both p and q");
    };
    if (sOne && attachDomainOk)
        checkAnchoredReach(anchored(spec.s1Option) ? spec.s1 : spec.s2, spec.pAttachS,
                           spec.qAttachS);
    if (tOne && attachDomainOk)
        checkAnchoredReach(anchored(spec.t1Option) ? spec.t1 : spec.t2, spec.pAttachT,
                           spec.qAttachT);

    // outside-vertex lists; indices must be checkable before edges matter
    bool indicesOk = true;
    std::set<int> quadNbrs;
    for (int w : spec.omegaQuadNeighbors) {
        if (w < 0 || w >= spec.n) {
            flag("outside-quad-edges", "quad neighbor vertex " + vtx(w) + " is outside 1.." +
                                           std::to_string(spec.n));
            indicesOk = false;
        } else if (roles.is_role(w)) {
            flag("outside-quad-edges", roles.name(w) + " is a role vertex, not an outside vertex");
        } else if (!quadNbrs.insert(w).second) {
            flag("outside-quad-edges", "quad neighbor vertex " + vtx(w) + " is listed twice");
        }
    }

    std::set<std::pair<int, int>> seenEdges; // normalized, across both raw lists
    auto normalized = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    // anchors each outside vertex reaches, and quad members raw edges touch
    std::set<std::pair<int, int>> anchorTouch; // (omega, anchor)
    std::set<std::pair<int, int>> quadTouch;   // (omega, quad member), raw edges only

    for (auto [w, x] : spec.omegaPqEdges) {
        if (w < 0 || w >= spec.n || x < 0 || x >= spec.n) {
            flag("outside-anchor-edges", "edge " + vtx(w) + "-" + vtx(x) + " leaves 1.." +
                                             std::to_string(spec.n));
            indicesOk = false;
            continue;
        }
        if (!roles.is_anchor(x)) {
            flag("outside-anchor-edges",
                 "edge " + vtx(w) + "-" + vtx(x) + " must end at an anchor (p or q)");
            continue;
        }
        if (roles.is_role(w)) {
            flag("outside-anchor-edges",
                 roles.name(w) + " is a role vertex; anchor edges start outside the roles");
            continue;
        }
        if (!seenEdges.insert(normalized(w, x)).second) {
            flag("outside-anchor-edges", "edge " + vtx(w) + "-" + vtx(x) + " is listed twice");
            continue;
        }
        anchorTouch.emplace(w, x);
    }

    for (auto [u, v] : spec.omegaInternalEdges) {
        if (u < 0 || u >= spec.n || v < 0 || v >= spec.n) {
            flag("outside-internal-edges", "edge " + vtx(u) + "-" + vtx(v) + " leaves 1.." +
                                               std::to_string(spec.n));
            indicesOk = false;
            continue;
        }
        if (u == v) {
            flag("outside-internal-edges", "edge " + vtx(u) + "-" + vtx(v) + " is a self-loop");
            continue;
        }
        if (roles.is_role(u) && roles.is_role(v)) {
            flag("outside-internal-edges", "edge " + vtx(u) + "-" + vtx(v) +
                                               " joins two role vertices; role adjacency is fixed "
                                               "by the options and flags");
            continue;
        }
        if (!seenEdges.insert(normalized(u, v)).second) {
            flag("outside-internal-edges", "edge " + vtx(u) + "-" + vtx(v) + " is listed twice");
            continue;
        }
        // a role endpoint routes into the anchor or quad rule checks below
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            if (roles.is_anchor(b) && !roles.is_role(a)) anchorTouch.emplace(a, b);
            if (roles.in_quad(b) && !roles.is_role(a)) quadTouch.emplace(a, b);
        }
    }

    // every outside vertex takes both anchors or neither
    for (auto it = anchorTouch.begin(); it != anchorTouch.end();) {
        const int w = it->first;
        std::vector<int> got;
        while (it != anchorTouch.end() && it->first == w) got.push_back((it++)->second);
        if (got.size() == 1)
            flag("outside-anchor-edges", "outside vertex " + vtx(w) + " is adjacent to " +
                                             roles.name(got[0]) +
                                             " only; an outside vertex takes both anchors or neither");
    }

    // quad adjacency goes through the quad-neighbor list, all four at once
    for (auto it = quadTouch.begin(); it != quadTouch.end();) {
        const int w = it->first;
        std::vector<int> got;
        while (it != quadTouch.end() && it->first == w) got.push_back((it++)->second);
        if (quadNbrs.count(w)) {
            flag("outside-quad-edges", "outside vertex " + vtx(w) +
                                           " already takes all four pair members through the "
                                           "quad-neighbor list; drop the extra edge to " +
                                           join_names(roles, got));
            continue;
        }
        std::vector<int> missing;
        for (int m : {spec.s1, spec.s2, spec.t1, spec.t2})
            if (std::find(got.begin(), got.end(), m) == got.end()) missing.push_back(m);
        if (missing.empty()) {
            flag("outside-quad-edges", "outside vertex " + vtx(w) +
                                           " takes its quad edges through the free edge list; "
                                           "list it as a quad neighbor instead");
            continue;
        }
        flag("outside-quad-edges",
             "outside vertex " + vtx(w) + " is adjacent to " + join_names(roles, got) +
                 " but not " + join_names(roles, missing) +
                 "; an outside vertex takes all four pair members or none");
    }

    if (!out.empty() || !indicesOk) return out;

    const Graph g = assemble(spec);
    if (!is_connected(g)) {
        std::string stranded;
        // report the smallest vertex the anchors cannot reach
        std::vector<char> seen(spec.n, 0);
        std::vector<int> stack{spec.p};
        seen[spec.p] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < spec.n; ++v)
                if (g.has_edge(u, v) && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        for (int v = 0; v < spec.n && stranded.empty(); ++v)
            if (!seen[v]) stranded = vtx(v);
        flag("connectivity", "vertex " + stranded + " is unreachable from the anchors");
    }
    return out;
}

DesignOutput build_design(const QcdDesignSpec& spec) {
    const std::vector<DesignViolation> bad = validate_design(spec);
    if (!bad.empty()) {
        std::string msg = "design spec rejected:";
        for (const auto& v : bad) msg += " [" + v.rule + "] " + v.detail + ";";
        msg.pop_back();
        fail(ErrorCode::InvalidSpec, msg);
    }

    const Graph g = assemble(spec);
    const int sigma = static_cast<int>(spec.omegaQuadNeighbors.size());

    // the construction pins every pair-member degree; a mismatch here is a
    // builder bug, not a spec problem
    const auto expect = [&](PairOption o, bool chord) {
        return sigma + (anchored(o) ? 3 : 2) + (chord ? 1 : 0);
    };
    const std::array<std::pair<int, int>, 4> degrees{{
        {spec.s1, expect(spec.s1Option, spec.sPairEdge)},
        {spec.s2, expect(spec.s2Option, spec.sPairEdge)},
        {spec.t1, expect(spec.t1Option, spec.tPairEdge)},
        {spec.t2, expect(spec.t2Option, spec.tPairEdge)},
    }};
    for (auto [v, d] : degrees)
        if (g.degree(v) != d)
            fail(ErrorCode::InconsistentTests,
                 "design degree bookkeeping broke at vertex " + vtx(v) + ": built " +
                     std::to_string(g.degree(v)) + ", expected " + std::to_string(d));

    std::vector<Rational> eta(spec.n, Rational(0));
    eta[spec.s1] = 1;
    eta[spec.s2] = 1;
    eta[spec.t1] = -1;
    eta[spec.t2] = -1;
    const Integer lambda = sigma + 4;

    std::vector<FieldElement> y;
    y.reserve(eta.size());
    for (const Rational& e : eta) y.emplace_back(e);
    if (!verify_eigenpair(laplacian(g), FieldElement(lambda), y))
        fail(ErrorCode::InconsistentTests,
             "designed vector is not an exact eigenvector for eigenvalue " + lambda.get_str());

    return DesignOutput{g, std::move(eta), lambda};
}

QcdDesignSpec random_design(int n, uint64_t seed) {
    if (n < 7)
        fail(ErrorCode::InvalidSpec,
             "a design needs at least 7 vertices (six roles plus one outside vertex), got " +
                 std::to_string(n));
    if (n > 64)
        fail(ErrorCode::InvalidSpec,
             "vertex count " + std::to_string(n) + " exceeds the graph cap of 64");

    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        QcdDesignSpec spec;
        spec.n = n;

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < 6; ++i)
            std::swap(perm[i], perm[i + static_cast<int>(rng.below(n - i))]);
        spec.p = perm[0];
        spec.q = perm[1];
        spec.s1 = perm[2];
        spec.s2 = perm[3];
        spec.t1 = perm[4];
        spec.t2 = perm[5];

        const bool s1Anchored = rng.coin();
        const bool t1Anchored = rng.coin();
        spec.s1Option = s1Anchored ? PairOption::Anchored : PairOption::Floating;
        spec.s2Option = s1Anchored ? PairOption::Floating : PairOption::Anchored;
        spec.t1Option = t1Anchored ? PairOption::Anchored : PairOption::Floating;
        spec.t2Option = t1Anchored ? PairOption::Floating : PairOption::Anchored;
        spec.pAttachS = spec.qAttachS = s1Anchored ? spec.s1 : spec.s2;
        spec.pAttachT = spec.qAttachT = t1Anchored ? spec.t1 : spec.t2;

        spec.sPairEdge = rng.coin();
        spec.tPairEdge = rng.coin();
        spec.pqEdge = rng.coin();

        std::vector<int> omega(perm.begin() + 6, perm.end());
        std::sort(omega.begin(), omega.end());
        for (int w : omega) {
            switch (rng.below(3)) {
            case 0:
                spec.omegaQuadNeighbors.push_back(w);
                break;
            case 1:
                spec.omegaPqEdges.emplace_back(w, spec.p);
                spec.omegaPqEdges.emplace_back(w, spec.q);
                break;
            default:
                break;
            }
        }
        for (size_t i = 0; i < omega.size(); ++i)
            for (size_t j = i + 1; j < omega.size(); ++j)
                if (rng.below(4) == 0)
                    spec.omegaInternalEdges.emplace_back(omega[i], omega[j]);

        // leftover components hang off outside vertices only (the roles are
        // mutually connected); wire each one to both anchors
        const Graph g = assemble(spec);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{spec.p};
        seen[spec.p] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (g.has_edge(u, v) && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        for (int w0 = 0; w0 < n; ++w0) {
            if (seen[w0]) continue;
            spec.omegaPqEdges.emplace_back(w0, spec.p);
            spec.omegaPqEdges.emplace_back(w0, spec.q);
            seen[w0] = 1;
            std::vector<int> grow{w0};
            while (!grow.empty()) {
                int u = grow.back();
                grow.pop_back();
                for (int v = 0; v < n; ++v)
                    if (g.has_edge(u, v) && !seen[v]) {
                        seen[v] = 1;
                        grow.push_back(v);
                    }
            }
        }

        if (validate_design(spec).empty()) return spec;
    }
    fail(ErrorCode::ExhaustedRetries,
         "no valid design sampled after 32 attempts for n = " + std::to_string(n));
}

namespace {

const char* const kSpecMagic = "netctrl.design-spec.v1";

std::string option_str(PairOption o) { return anchored(o) ? "anchored" : "floating"; }

void put_pairs(std::ostringstream& os, const char* key, std::vector<std::pair<int, int>> es,
               bool sortWithin) {
    if (sortWithin)
        for (auto& [u, v] : es)
            if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    os << key << ":";
    for (auto [u, v] : es) os << " " << vtx(u) << "-" << vtx(v);
    os << "\n";
}

} // namespace

std::string serialize_design_spec(const QcdDesignSpec& spec) {
    std::ostringstream os;
    os << kSpecMagic << "\n";
    os << "n: " << spec.n << "\n";
    os << "p: " << vtx(spec.p) << "\n";
    os << "q: " << vtx(spec.q) << "\n";
    os << "s1: " << vtx(spec.s1) << "\n";
    os << "s2: " << vtx(spec.s2) << "\n";
    os << "t1: " << vtx(spec.t1) << "\n";
    os << "t2: " << vtx(spec.t2) << "\n";
    os << "s1-option: " << option_str(spec.s1Option) << "\n";
    os << "s2-option: " << option_str(spec.s2Option) << "\n";
    os << "t1-option: " << option_str(spec.t1Option) << "\n";
    os << "t2-option: " << option_str(spec.t2Option) << "\n";
    os << "p-attach: " << vtx(spec.pAttachS) << " " << vtx(spec.pAttachT) << "\n";
    os << "q-attach: " << vtx(spec.qAttachS) << " " << vtx(spec.qAttachT) << "\n";
    os << "s-pair-edge: " << (spec.sPairEdge ? "yes" : "no") << "\n";
    os << "t-pair-edge: " << (spec.tPairEdge ? "yes" : "no") << "\n";
    os << "p-q-edge: " << (spec.pqEdge ? "yes" : "no") << "\n";
    std::vector<int> quad = spec.omegaQuadNeighbors;
    std::sort(quad.begin(), quad.end());
    os << "outside-quad-neighbors:";
    for (int w : quad) os << " " << vtx(w);
    os << "\n";
    // anchor edges keep their outside-first orientation
    put_pairs(os, "outside-anchor-edges", spec.omegaPqEdges, false);
    put_pairs(os, "outside-internal-edges", spec.omegaInternalEdges, true);
    return os.str();
}

namespace {

std::vector<std::string> spec_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// strips "key: " (or bare "key:" for list lines) and returns the remainder
std::string expect_key(const std::vector<std::string>& lines, size_t idx, const std::string& key) {
    if (idx >= lines.size())
        fail(ErrorCode::ParseError, "design spec text ends before the '" + key + "' line");
    const std::string& line = lines[idx];
    const std::string head = key + ":";
    if (line.compare(0, head.size(), head) != 0)
        fail(ErrorCode::ParseError, "expected '" + key + ":' on line " + std::to_string(idx + 1) +
                                        ", got '" + line + "'");
    std::string rest = line.substr(head.size());
    if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
    return rest;
}

int parse_count(const std::string& tok, const std::string& what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::ParseError, what + " '" + tok + "' is not a positive integer");
    bool ok = tok.size() <= 9; // graph cap is 64; anything longer is garbage
    if (!ok) fail(ErrorCode::ParseError, what + " '" + tok + "' is out of range");
    return std::stoi(tok);
}

int parse_vertex(const std::string& tok, const std::string& what) {
    const int v = parse_count(tok, what);
    if (v == 0) fail(ErrorCode::ParseError, what + " '" + tok + "' must be 1-based");
    return v - 1;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream is(s);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

PairOption parse_option(const std::string& tok, const std::string& what) {
    if (tok == "anchored") return PairOption::Anchored;
    if (tok == "floating") return PairOption::Floating;
    fail(ErrorCode::ParseError, what + " must be 'anchored' or 'floating', got '" + tok + "'");
}

bool parse_flag(const std::string& tok, const std::string& what) {
    if (tok == "yes") return true;
    if (tok == "no") return false;
    fail(ErrorCode::ParseError, what + " must be 'yes' or 'no', got '" + tok + "'");
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& rest, const std::string& what) {
    std::vector<std::pair<int, int>> edges;
    for (const std::string& tok : split_ws(rest)) {
        const size_t dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
            fail(ErrorCode::ParseError, what + " entry '" + tok + "' is not of the form u-v");
        edges.emplace_back(parse_vertex(tok.substr(0, dash), what),
                           parse_vertex(tok.substr(dash + 1), what));
    }
    return edges;
}

} // namespace

QcdDesignSpec parse_design_spec(const std::string& text) {
    const std::vector<std::string> lines = spec_lines(text);
    if (lines.empty() || lines[0] != kSpecMagic)
        fail(ErrorCode::ParseError, std::string("design spec must start with '") + kSpecMagic + "'");

    QcdDesignSpec spec;
    size_t i = 1;
    spec.n = parse_count(expect_key(lines, i++, "n"), "vertex count");
    spec.p = parse_vertex(expect_key(lines, i++, "p"), "role p");
    spec.q = parse_vertex(expect_key(lines, i++, "q"), "role q");
    spec.s1 = parse_vertex(expect_key(lines, i++, "s1"), "role s1");
    spec.s2 = parse_vertex(expect_key(lines, i++, "s2"), "role s2");
    spec.t1 = parse_vertex(expect_key(lines, i++, "t1"), "role t1");
    spec.t2 = parse_vertex(expect_key(lines, i++, "t2"), "role t2");
    spec.s1Option = parse_option(expect_key(lines, i++, "s1-option"), "s1-option");
    spec.s2Option = parse_option(expect_key(lines, i++, "s2-option"), "s2-option");
    spec.t1Option = parse_option(expect_key(lines, i++, "t1-option"), "t1-option");
    spec.t2Option = parse_option(expect_key(lines, i++, "t2-option"), "t2-option");
    for (const char* key : {"p-attach", "q-attach"}) {
        const std::vector<std::string> toks = split_ws(expect_key(lines, i++, key));
        if (toks.size() != 2)
            fail(ErrorCode::ParseError,
                 std::string(key) + " needs exactly two vertices, got " + std::to_string(toks.size()));
        const int s = parse_vertex(toks[0], key);
        const int t = parse_vertex(toks[1], key);
        (key[0] == 'p' ? spec.pAttachS : spec.qAttachS) = s;
        (key[0] == 'p' ? spec.pAttachT : spec.qAttachT) = t;
    }
    spec.sPairEdge = parse_flag(expect_key(lines, i++, "s-pair-edge"), "s-pair-edge");
    spec.tPairEdge = parse_flag(expect_key(lines, i++, "t-pair-edge"), "t-pair-edge");
    spec.pqEdge = parse_flag(expect_key(lines, i++, "p-q-edge"), "p-q-edge");
    for (const std::string& tok : split_ws(expect_key(lines, i++, "outside-quad-neighbors")))
        spec.omegaQuadNeighbors.push_back(parse_vertex(tok, "quad neighbor"));
    spec.omegaPqEdges = parse_edge_list(expect_key(lines, i++, "outside-anchor-edges"), "anchor edge");
    spec.omegaInternalEdges =
        parse_edge_list(expect_key(lines, i++, "outside-internal-edges"), "internal edge");
    if (i != lines.size())
        fail(ErrorCode::ParseError, "unexpected trailing line '" + lines[i] + "'");
    return spec;
}

} // namespace netctrl
