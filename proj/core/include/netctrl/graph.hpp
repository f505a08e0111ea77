#ifndef NETCTRL_GRAPH_HPP
#define NETCTRL_GRAPH_HPP

#include <netctrl/matrix.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netctrl {

// Simple undirected graph, n <= 64 so one adjacency row fits a machine word.
// Vertices are 0-based internally; every I/O surface is 1-based.
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj; // adj[i] bit j <=> edge {i,j}

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    uint64_t neighbors(int v) const { return adj[v]; }

    int edge_count() const {
        int m = 0;
        for (int i = 0; i < n; ++i) m += degree(i);
        return m / 2;
    }

    // (u,v) pairs with u < v, 0-based, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// edges are 1-based pairs; duplicates collapse, (u,u) rejected.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// L = D - A.
IntMatrix laplacian(const Graph& g);

bool is_connected(const Graph& g);

// Follower dynamics blocks for a chosen leader set: F is the principal
// submatrix of L on follower rows/columns, R the follower rows of the
// deleted (leader) columns. Follower order ascends by original label.
struct Partition {
    IntMatrix F;                 // n_f x n_f
    IntMatrix R;                 // n_f x l
    std::vector<int> followers;  // follower position -> original 0-based vertex
    std::vector<int> leaders;    // leader column -> original 0-based vertex
};

// leaders: distinct 0-based vertices, nonempty, proper subset.
Partition follower_partition(const Graph& g, const std::vector<int>& leaders);

// Yields every connected labeled simple graph on n vertices exactly once, in
// ascending edge-mask order (bit e of the mask = edge e in the (u<v) lex
// order). 2 <= n <= 8.
void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& yield);

// Count without materializing; same enumeration.
long long count_connected_graphs(int n);

// Canonical code: minimum byte encoding over all vertex permutations,
// optionally fixing one distinguished vertex at position 0. Equal codes
// <=> isomorphic (respecting the distinguished vertex when present).
struct CanonicalCode {
    std::vector<uint8_t> bytes;

    std::string hex() const;
    static CanonicalCode from_hex(const std::string& s);

    bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

CanonicalCode canonical_form(const Graph& g, std::optional<int> distinguished = std::nullopt);

// Deterministic splitmix64; used by the sampled verifier regimes and the
// random design driver so runs reproduce bit-for-bit across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
    bool coin() { return next() & 1u; }
};

// Uniform edge-probability 1/2 sample, rejected until connected.
Graph random_connected_graph(int n, Rng& rng);

} // namespace netctrl

#endif
