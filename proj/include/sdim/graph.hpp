#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdim/bitset.hpp"

namespace sdim {

struct GpParams {
    int n = 0;
    int k = 0;

    bool valid() const { return n >= 3 && k >= 1 && 2 * k < n; }
};

// Immutable simple undirected graph, adjacency-list form, optionally carrying
// the u/v labeling of a generalized Petersen graph GP(n,k):
// u_i -> vertex i, v_i -> vertex n+i.
class Graph {
public:
    static Graph from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
        if (n_vertices <= 0)
            throw std::invalid_argument("graph needs at least one vertex");
        Graph g;
        g.adj_.assign(n_vertices, {});
        for (auto [a, b] : edges) g.add_edge(a, b);
        g.finish();
        return g;
    }

    int n_vertices() const { return int(adj_.size()); }
    int n_edges() const { return n_edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool has_edge(int a, int b) const {
        const auto& na = adj_[a];
        return std::binary_search(na.begin(), na.end(), b);
    }

    bool is_connected() const {
        if (adj_.empty()) return false;
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        return reached == n_vertices();
    }

    const std::optional<GpParams>& gp() const { return gp_; }

    // "u3" / "v7" for GP graphs, plain decimal id otherwise.
    std::string label(int v) const {
        if (gp_) {
            int n = gp_->n;
            return v < n ? "u" + std::to_string(v) : "v" + std::to_string(v - n);
        }
        return std::to_string(v);
    }

    // Inverse of label(); accepts raw decimal ids for any graph.
    int parse_label(const std::string& s) const {
        if (s.empty()) throw std::invalid_argument("empty vertex label");
        if (gp_ && (s[0] == 'u' || s[0] == 'v')) {
            int i = parse_int(s.substr(1), "vertex label '" + s + "'");
            if (i < 0 || i >= gp_->n)
                throw std::invalid_argument("vertex label '" + s + "' out of range");
            return s[0] == 'u' ? i : gp_->n + i;
        }
        int v = parse_int(s, "vertex id '" + s + "'");
        if (v < 0 || v >= n_vertices())
            throw std::invalid_argument("vertex id '" + s + "' out of range");
        return v;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(n_edges_);
        for (int a = 0; a < n_vertices(); ++a)
            for (int b : adj_[a])
                if (a < b) out.emplace_back(a, b);
        return out;
    }

    friend Graph build_gp(const GpParams& p);
    friend Graph read_edge_list(std::istream& in);

private:
    void add_edge(int a, int b) {
        int n = n_vertices();
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        ++n_edges_;
    }

    void finish() {
        for (int v = 0; v < n_vertices(); ++v) {
            auto& nb = adj_[v];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        }
    }

    static int parse_int(const std::string& s, const std::string& what) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(what);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse " + what);
        }
    }

    std::vector<std::vector<int>> adj_;
    int n_edges_ = 0;
    std::optional<GpParams> gp_;
};

// GP(n,k): outer cycle u_0..u_{n-1}, spokes u_i-v_i, inner circulant v_i-v_{i+k}.
// All vertex indices mod n. 2n vertices, 3n edges, 3-regular.
inline Graph build_gp(const GpParams& p) {
    if (!p.valid())
        throw std::invalid_argument("GP(n,k) requires n >= 3 and 1 <= k < n/2, got n=" +
                                    std::to_string(p.n) + " k=" + std::to_string(p.k));
    Graph g;
    g.adj_.assign(2 * p.n, {});
    for (int i = 0; i < p.n; ++i) {
        g.add_edge(i, (i + 1) % p.n);
        g.add_edge(i, p.n + i);
        g.add_edge(p.n + i, p.n + (i + p.k) % p.n);
    }
    g.finish();
    g.gp_ = p;
    return g;
}

// Edge-list text format:
//   c <comment>            (anywhere; "c gp n=<n> k=<k>" restores GP labels)
//   p <n_vertices> <n_edges>
//   e <i> <j>               (0-based, one per edge)
inline void write_edge_list(const Graph& g, std::ostream& out) {
    if (g.gp())
        out << "c gp n=" << g.gp()->n << " k=" << g.gp()->k << "\n";
    out << "p " << g.n_vertices() << " " << g.n_edges() << "\n";
    for (auto [a, b] : g.edges())
        out << "e " << a << " " << b << "\n";
}

inline Graph read_edge_list(std::istream& in) {
    int n = -1, m = -1;
    std::optional<GpParams> gp;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            // comments are free text; "c gp n=<n> k=<k>" additionally restores
            // labels, and anything malformed there is just ignored
            std::string word;
            if (ls >> word && word == "gp") {
                GpParams p;
                std::string kv;
                while (ls >> kv) {
                    try {
                        if (kv.rfind("n=", 0) == 0) p.n = std::stoi(kv.substr(2));
                        if (kv.rfind("k=", 0) == 0) p.k = std::stoi(kv.substr(2));
                    } catch (const std::exception&) {
                        p = GpParams{};
                        break;
                    }
                }
                if (p.valid()) gp = p;
            }
            continue;
        }
        if (tag == "p") {
            if (n >= 0) throw std::invalid_argument("duplicate 'p' line");
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                throw std::invalid_argument("bad 'p' line at line " + std::to_string(lineno));
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw std::invalid_argument("'e' line before 'p' line");
            int a, b;
            if (!(ls >> a >> b))
                throw std::invalid_argument("bad 'e' line at line " + std::to_string(lineno));
            edges.emplace_back(a, b);
            continue;
        }
        throw std::invalid_argument("unknown line tag '" + tag + "' at line " +
                                    std::to_string(lineno));
    }
    if (n < 0) throw std::invalid_argument("missing 'p' line");
    if (int(edges.size()) != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", found " + std::to_string(edges.size()));
    Graph g = Graph::from_edges(n, edges);
    if (gp && 2 * gp->n == n) g.gp_ = gp;
    return g;
}

} // namespace sdim
