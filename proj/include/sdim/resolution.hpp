#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/distance.hpp"
#include "sdim/graph.hpp"

namespace sdim {

// w strongly resolves (u,v) iff u lies on a shortest v-w path or v lies on a
// shortest u-w path, i.e. d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v).
inline bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v) {
    const int wu = dm.at(w, u), wv = dm.at(w, v), uv = dm.at(u, v);
    return wu == wv + uv || wv == wu + uv;
}

// One covering row: the unordered pair (u,v) and every vertex that strongly
// resolves it. Both endpoints always qualify (d(u,u)=0 collapses the equality).
struct PairConstraint {
    int u = 0;
    int v = 0; // u < v
    VertexSet resolvers;
};

struct ConstraintSystem {
    int n_vertices = 0;
    std::vector<PairConstraint> constraints; // lexicographic (u,v) order
};

inline ConstraintSystem build_constraints(const DistanceMatrix& dm) {
    const int n = dm.n_vertices();
    ConstraintSystem cs;
    cs.n_vertices = n;
    cs.constraints.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            PairConstraint pc{u, v, VertexSet(n)};
            for (int w = 0; w < n; ++w)
                if (strongly_resolves(dm, w, u, v)) pc.resolvers.set(w);
            cs.constraints.push_back(std::move(pc));
        }
    return cs;
}

struct VerifyResult {
    std::optional<std::pair<int, int>> failing_pair; // lexicographically first

    bool ok() const { return !failing_pair.has_value(); }
};

// S is a strong resolving set iff it meets every constraint row.
inline VerifyResult verify_resolving_set(const ConstraintSystem& cs, const VertexSet& s) {
    for (const auto& pc : cs.constraints)
        if (!pc.resolvers.intersects(s)) return {std::make_pair(pc.u, pc.v)};
    return {};
}

struct MmdPairList {
    std::vector<std::pair<int, int>> pairs; // u < v, lexicographic
};

// Mutually maximally distant: no neighbor of u is farther from v than u is,
// and symmetrically for v.
inline bool is_mmd_pair(const Graph& g, const DistanceMatrix& dm, int u, int v) {
    const int duv = dm.at(u, v);
    for (int w : g.neighbors(u))
        if (dm.at(w, v) > duv) return false;
    for (int w : g.neighbors(v))
        if (dm.at(u, w) > duv) return false;
    return true;
}

inline MmdPairList mmd_pairs(const Graph& g, const DistanceMatrix& dm) {
    MmdPairList out;
    const int n = g.n_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (is_mmd_pair(g, dm, u, v)) out.pairs.emplace_back(u, v);
    return out;
}

// All pairs at distance exactly Diam.
inline std::vector<std::pair<int, int>> diametral_pairs(const DistanceMatrix& dm) {
    const int diam = diameter(dm);
    std::vector<std::pair<int, int>> out;
    const int n = dm.n_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dm.at(u, v) == diam) out.emplace_back(u, v);
    return out;
}

// CPLEX-style LP text of the covering model: minimize sum of binaries, one
// ">= 1" row per vertex pair. Debug aid for cross-checking with third-party
// solvers; nothing in-repo consumes it.
inline void write_lp(const ConstraintSystem& cs, std::ostream& out) {
    out << "\\ strong metric dimension covering model\n";
    out << "Minimize\n obj:";
    for (int i = 0; i < cs.n_vertices; ++i)
        out << (i ? " + y" : " y") << i;
    out << "\nSubject To\n";
    for (const auto& pc : cs.constraints) {
        out << " c" << pc.u << "_" << pc.v << ":";
        bool first = true;
        pc.resolvers.for_each_set([&](int w) {
            out << (first ? " y" : " + y") << w;
            first = false;
        });
        out << " >= 1\n";
    }
    out << "Binaries\n";
    for (int i = 0; i < cs.n_vertices; ++i) out << " y" << i;
    out << "\nEnd\n";
}

} // namespace sdim
