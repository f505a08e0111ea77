#include <netctrl/graph.hpp>

#include <algorithm>
#include <numeric>

namespace netctrl {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 64) fail(ErrorCode::SizeTooLarge, "vertex count must be in 1..64, got " + std::to_string(n));
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            fail(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                 ") outside 1.." + std::to_string(n));
        if (u == v) fail(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj[u - 1] |= 1ull << (v - 1);
        g.adj[v - 1] |= 1ull << (u - 1);
    }
    return g;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix L(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        L(i, i) = g.degree(i);
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j)) L(i, j) = -1;
    }
    return L;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    uint64_t reached = 1;
    for (;;) {
        uint64_t next = reached;
        uint64_t frontier = reached;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.adj[v];
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == all;
}

Partition follower_partition(const Graph& g, const std::vector<int>& leaders) {
    if (leaders.empty()) fail(ErrorCode::InvalidLeader, "leader set is empty");
    uint64_t leaderMask = 0;
    for (int v : leaders) {
        if (v < 0 || v >= g.n) fail(ErrorCode::InvalidLeader, "leader index " + std::to_string(v + 1) + " out of range");
        if ((leaderMask >> v) & 1u) fail(ErrorCode::InvalidLeader, "duplicate leader " + std::to_string(v + 1));
        leaderMask |= 1ull << v;
    }
    Partition p;
    for (int v = 0; v < g.n; ++v)
        if (!((leaderMask >> v) & 1u)) p.followers.push_back(v);
    if (p.followers.empty()) fail(ErrorCode::EmptyFollowerSet, "every vertex is a leader");
    p.leaders = leaders;
    std::sort(p.leaders.begin(), p.leaders.end());

    IntMatrix L = laplacian(g);
    int nf = static_cast<int>(p.followers.size());
    int l = static_cast<int>(p.leaders.size());
    p.F = IntMatrix(nf, nf);
    p.R = IntMatrix(nf, l);
    for (int i = 0; i < nf; ++i) {
        for (int j = 0; j < nf; ++j) p.F(i, j) = L(p.followers[i], p.followers[j]);
        for (int j = 0; j < l; ++j) p.R(i, j) = L(p.followers[i], p.leaders[j]);
    }
    return p;
}

namespace {

// Fixed edge<->bit assignment: (0,1),(0,2),...,(0,n-1),(1,2),... ascending.
std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

} // namespace

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 2 || n > 8) fail(ErrorCode::SizeTooLarge, "exhaustive enumeration supports 2..8 vertices");
    auto slots = edge_slots(n);
    uint32_t top = 1u << slots.size();
    Graph g;
    g.n = n;
    for (uint32_t mask = 0; mask < top; ++mask) {
        g.adj.assign(n, 0);
        for (size_t e = 0; e < slots.size(); ++e) {
            if ((mask >> e) & 1u) {
                auto [u, v] = slots[e];
                g.adj[u] |= 1ull << v;
                g.adj[v] |= 1ull << u;
            }
        }
        if (is_connected(g)) yield(g);
    }
}

long long count_connected_graphs(int n) {
    long long c = 0;
    enumerate_connected_graphs(n, [&](const Graph&) { ++c; });
    return c;
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 0xf];
    }
    return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() % 2 != 0) fail(ErrorCode::ParseError, "odd-length hex code");
    CanonicalCode code;
    code.bytes.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        int hi = nibble(s[i]), lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0) fail(ErrorCode::ParseError, "bad hex digit in canonical code");
        code.bytes.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return code;
}

CanonicalCode canonical_form(const Graph& g, std::optional<int> distinguished) {
    if (g.n > 8) fail(ErrorCode::SizeTooLarge, "canonical form supports up to 8 vertices");
    if (distinguished && (*distinguished < 0 || *distinguished >= g.n))
        fail(ErrorCode::IndexOutOfRange, "distinguished vertex out of range");

    auto slots = edge_slots(g.n);
    // perm[i] = original vertex placed at position i; the encoding reads the
    // permuted adjacency along the fixed edge slots.
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);

    uint32_t best = ~0u;
    bool any = false;
    do {
        if (distinguished && perm[0] != *distinguished) continue;
        uint32_t bits = 0;
        for (size_t e = 0; e < slots.size(); ++e) {
            auto [i, j] = slots[e];
            if (g.has_edge(perm[i], perm[j])) bits |= 1u << e;
        }
        if (!any || bits < best) {
            best = bits;
            any = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    CanonicalCode code;
    code.bytes.push_back(static_cast<uint8_t>(g.n));
    code.bytes.push_back(distinguished ? 1 : 0);
    for (int shift = 24; shift >= 0; shift -= 8)
        code.bytes.push_back(static_cast<uint8_t>((best >> shift) & 0xff));
    return code;
}

Graph random_connected_graph(int n, Rng& rng) {
    if (n < 2 || n > 64) fail(ErrorCode::SizeTooLarge, "random graph supports 2..64 vertices");
    Graph g;
    g.n = n;
    for (;;) {
        g.adj.assign(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin()) {
                    g.adj[u] |= 1ull << v;
                    g.adj[v] |= 1ull << u;
                }
        if (is_connected(g)) return g;
    }
}

} // namespace netctrl
