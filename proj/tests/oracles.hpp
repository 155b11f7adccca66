#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: Floyd-Warshall distances, shortest-path enumeration for the
// resolution predicate, exhaustive subset search for the exact dimension,
// and bitmask vertex cover. Slow on purpose; use on small graphs only.

#include <algorithm>
#include <random>
#include <vector>

#include "sdim/distance.hpp"
#include "sdim/graph.hpp"
#include "sdim/resolution.hpp"

namespace oracle {

inline sdim::DistanceMatrix floyd_warshall(const sdim::Graph& g) {
    const int n = g.n_vertices();
    const int inf = 1 << 14;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    sdim::DistanceMatrix dm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dm.at(i, j) = std::uint16_t(d[i][j]);
    return dm;
}

// Does x appear on at least one shortest a-b path? Enumerates the paths.
inline bool on_some_shortest_path(const sdim::Graph& g, const sdim::DistanceMatrix& dm,
                                  int a, int b, int x) {
    if (a == x || b == x) return true;
    std::vector<int> stack{a};
    // walk every shortest path step by step
    struct Frame {
        int at;
        bool seen_x;
    };
    std::vector<Frame> frames{{a, a == x}};
    while (!frames.empty()) {
        Frame f = frames.back();
        frames.pop_back();
        if (f.at == b) {
            if (f.seen_x) return true;
            continue;
        }
        for (int y : g.neighbors(f.at))
            if (dm.at(f.at, b) == dm.at(y, b) + 1)
                frames.push_back({y, f.seen_x || y == x});
    }
    return false;
}

// Definition-level strong resolution: u on a shortest v-w path, or v on a
// shortest u-w path.
inline bool strongly_resolves(const sdim::Graph& g, const sdim::DistanceMatrix& dm, int w,
                              int u, int v) {
    return on_some_shortest_path(g, dm, v, w, u) || on_some_shortest_path(g, dm, u, w, v);
}

// Definition-level MMD: no neighbor of u farther from v, no neighbor of v
// farther from u.
inline std::vector<std::pair<int, int>> mmd_pairs(const sdim::Graph& g,
                                                  const sdim::DistanceMatrix& dm) {
    std::vector<std::pair<int, int>> out;
    const int n = g.n_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool ok = true;
            for (int w : g.neighbors(u))
                if (dm.at(w, v) > dm.at(u, v)) ok = false;
            for (int w : g.neighbors(v))
                if (dm.at(u, w) > dm.at(u, v)) ok = false;
            if (ok) out.emplace_back(u, v);
        }
    return out;
}

inline bool resolves_all_pairs(const sdim::Graph& g, const sdim::DistanceMatrix& dm,
                               unsigned long long mask) {
    const int n = g.n_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool hit = false;
            for (int w = 0; w < n && !hit; ++w)
                if ((mask >> w) & 1ULL) hit = strongly_resolves(g, dm, w, u, v);
            if (!hit) return false;
        }
    return true;
}

// Exhaustive minimum: subsets in increasing cardinality, ids ascending.
// Graphs up to ~12 vertices.
inline int exhaustive_sdim(const sdim::Graph& g, const sdim::DistanceMatrix& dm) {
    const int n = g.n_vertices();
    for (int size = 1; size <= n; ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            unsigned long long mask = 0;
            for (int i : comb) mask |= 1ULL << i;
            if (resolves_all_pairs(g, dm, mask)) return size;
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return n;
}

// Bitmask minimum vertex cover, up to ~20 vertices.
inline int min_vertex_cover(const std::vector<std::pair<int, int>>& edges, int n) {
    if (edges.empty()) return 0;
    int best = n;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1ULL) && !((mask >> v) & 1ULL)) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

// Deterministic random connected graph, 2..max_n vertices.
inline sdim::Graph random_connected_graph(std::mt19937& rng, int max_n = 12) {
    std::uniform_int_distribution<int> nd(2, max_n);
    std::uniform_real_distribution<double> pd(0.2, 0.7);
    while (true) {
        const int n = nd(rng);
        const double p = pd(rng);
        std::vector<std::pair<int, int>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p) edges.emplace_back(i, j);
        sdim::Graph g = sdim::Graph::from_edges(n, edges);
        if (g.is_connected()) return g;
    }
}

} // namespace oracle
