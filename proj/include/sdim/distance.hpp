#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

// Dense all-pairs shortest-path matrix (unweighted hop counts, 16-bit).
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * n, 0) {}

    int n_vertices() const { return n_; }
    std::uint16_t at(int i, int j) const { return d_[std::size_t(i) * n_ + j]; }
    std::uint16_t& at(int i, int j) { return d_[std::size_t(i) * n_ + j]; }

    int max_entry() const {
        int m = 0;
        for (auto x : d_) m = std::max(m, int(x));
        return m;
    }

    // Symmetry, zero diagonal, positivity off-diagonal, triangle inequality.
    // Exercised by tests on every matrix they build.
    bool validate() const {
        for (int i = 0; i < n_; ++i) {
            if (at(i, i) != 0) return false;
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i) || at(i, j) < 1) return false;
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int l = 0; l < n_; ++l)
                    if (at(i, l) > at(i, j) + at(j, l)) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

// BFS from every source. Rejects disconnected input.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.n_vertices();
    DistanceMatrix dm(n);
    std::vector<int> queue(n);
    std::vector<std::int32_t> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int x = queue[head++];
            for (int y : g.neighbors(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue[tail++] = y;
                }
        }
        if (tail != n)
            throw std::runtime_error("graph is disconnected; distances undefined");
        for (int v = 0; v < n; ++v) dm.at(s, v) = std::uint16_t(dist[v]);
    }
    return dm;
}

inline int diameter(const DistanceMatrix& dm) { return dm.max_entry(); }

} // namespace sdim
