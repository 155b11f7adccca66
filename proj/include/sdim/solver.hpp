#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/resolution.hpp"

namespace sdim {

using Millis = std::chrono::milliseconds;

inline constexpr Millis kDefaultBudget = Millis(10 * 60 * 1000);

struct SolveResult {
    int optimum = 0;          // |basis|; the proven optimum iff proven
    VertexSet basis;          // best cover found
    int lower_bound_at_root = 0;
    int lower_bound = 0;      // best proven bound; equals optimum iff proven
    std::uint64_t nodes_explored = 0;
    Millis wall_time{0};
    bool proven = false;
};

namespace detail {

// Exact minimum "choose vertices to hit every row" by depth-first branch and
// bound. Deterministic: all ties break toward the smallest vertex id, search
// is sequential, so the returned cover is reproducible.
class CoverSolver {
public:
    CoverSolver(int n_vertices, const std::vector<Bitset>& rows, Millis budget)
        : n_(n_vertices), budget_(budget) {
        reduce(rows);
        order_rows();
    }

    SolveResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        start_ = t0;
        SolveResult res;
        if (rows_.empty()) {
            res.basis = VertexSet(n_);
            res.proven = true;
            res.nodes_explored = 1;
            res.wall_time = elapsed();
            return res;
        }

        available_ = VertexSet(n_);
        available_.set_all();
        uncovered_ = Bitset(int(rows_.size()));
        uncovered_.set_all();

        // Greedy incumbent; B&B can only improve on it.
        best_ = greedy_on_rows();
        best_size_ = int(best_.size());
        root_lb_ = packing_lower_bound();

        dfs(0);

        res.optimum = best_size_;
        res.basis = VertexSet(n_);
        for (int w : best_) res.basis.set(w);
        res.lower_bound_at_root = root_lb_;
        res.nodes_explored = nodes_;
        // Every subtree abandoned on timeout carries a valid bound for the
        // solutions below it; if none dips under the incumbent, the incumbent
        // is optimal after all.
        res.proven = !timed_out_ || abandoned_lb_ >= best_size_;
        res.lower_bound = res.proven ? best_size_ : std::min(abandoned_lb_, best_size_);
        res.wall_time = elapsed();
        return res;
    }

private:
    // Row dominance: a row that is a superset of another is hit whenever the
    // tighter row is, so it can be dropped. Preserves the optimum exactly.
    void reduce(const std::vector<Bitset>& rows) {
        std::vector<int> idx(rows.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return rows[a].count() < rows[b].count();
        });
        for (int i : idx) {
            bool dominated = false;
            for (const auto& kept : rows_)
                if (kept.subset_of(rows[i])) {
                    dominated = true;
                    break;
                }
            if (!dominated) rows_.push_back(rows[i]);
        }
        cols_.assign(n_, Bitset(int(rows_.size())));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            rows_[r].for_each_set([&](int w) { cols_[w].set(int(r)); });
    }

    void order_rows() {
        pack_order_.resize(rows_.size());
        std::iota(pack_order_.begin(), pack_order_.end(), 0);
        std::stable_sort(pack_order_.begin(), pack_order_.end(), [&](int a, int b) {
            return rows_[a].count() < rows_[b].count();
        });
    }

    std::vector<int> greedy_on_rows() {
        Bitset uncov(int(rows_.size()));
        uncov.set_all();
        std::vector<int> chosen;
        while (uncov.any()) {
            int best_w = -1, best_c = 0;
            for (int w = 0; w < n_; ++w) {
                int c = cols_[w].intersection_count(uncov);
                if (c > best_c) {
                    best_c = c;
                    best_w = w;
                }
            }
            chosen.push_back(best_w);
            uncov.subtract(cols_[best_w]);
        }
        return chosen;
    }

    // Rows with pairwise-disjoint available resolvers each need their own
    // vertex: a cheap valid lower bound on the residual cover.
    int packing_lower_bound() const {
        Bitset used(n_);
        int lb = 0;
        for (int r : pack_order_) {
            if (!uncovered_.test(r)) continue;
            Bitset avail = rows_[std::size_t(r)] & available_;
            if (!avail.intersects(used)) {
                ++lb;
                used |= avail;
            }
        }
        return lb;
    }

    Millis elapsed() const {
        return std::chrono::duration_cast<Millis>(std::chrono::steady_clock::now() - start_);
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if ((nodes_ == 1 || (nodes_ & 255) == 0) && elapsed() >= budget_) timed_out_ = true;
        return timed_out_;
    }

    void dfs(int size) {
        ++nodes_;
        if (out_of_time()) {
            abandoned_lb_ = std::min(abandoned_lb_, size + packing_lower_bound());
            return;
        }

        // Force vertices that are the last available resolver of some row.
        Bitset saved_uncovered = uncovered_;
        std::vector<int> forced;
        bool infeasible = false;
        for (bool changed = true; changed && !infeasible;) {
            changed = false;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (!uncovered_.test(int(r))) continue;
                Bitset avail = rows_[r] & available_;
                int c = avail.count();
                if (c == 0) {
                    infeasible = true;
                    break;
                }
                if (c == 1) {
                    int w = avail.first_set();
                    forced.push_back(w);
                    uncovered_.subtract(cols_[w]);
                    changed = true;
                }
            }
        }

        if (!infeasible) {
            int sz = size + int(forced.size());
            if (uncovered_.empty()) {
                if (sz < best_size_) {
                    best_size_ = sz;
                    best_.assign(chosen_.begin(), chosen_.end());
                    best_.insert(best_.end(), forced.begin(), forced.end());
                }
            } else if (sz + packing_lower_bound() < best_size_) {
                // Branch on the vertex covering the most uncovered rows.
                // The forcing fixpoint guarantees every uncovered row still has
                // at least two available resolvers, so a pick always exists.
                int pick = -1, pick_c = 0;
                for (int w = 0; w < n_; ++w) {
                    if (!available_.test(w)) continue;
                    int c = cols_[w].intersection_count(uncovered_);
                    if (c > pick_c) {
                        pick_c = c;
                        pick = w;
                    }
                }
                assert(pick >= 0);
                for (int w : forced) chosen_.push_back(w);

                chosen_.push_back(pick);
                Bitset pre_include = uncovered_;
                uncovered_.subtract(cols_[pick]);
                dfs(sz + 1);
                uncovered_ = pre_include;
                chosen_.pop_back();

                available_.reset(pick);
                dfs(sz);
                available_.set(pick);

                chosen_.resize(chosen_.size() - forced.size());
            }
        }
        uncovered_ = saved_uncovered;
    }

    int n_;
    Millis budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Bitset> rows_; // dominance-reduced
    std::vector<Bitset> cols_; // vertex -> reduced rows it hits
    std::vector<int> pack_order_;

    Bitset uncovered_;
    VertexSet available_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    int best_size_ = std::numeric_limits<int>::max();
    int root_lb_ = 0;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    int abandoned_lb_ = std::numeric_limits<int>::max();
};

} // namespace detail

inline SolveResult solve_cover(int n_vertices, const std::vector<Bitset>& rows,
                               Millis budget = kDefaultBudget) {
    for (const auto& r : rows)
        if (r.empty()) throw std::invalid_argument("uncoverable empty constraint row");
    return detail::CoverSolver(n_vertices, rows, budget).run();
}

// Exact strong metric dimension: minimum set of vertices hitting every
// pair-constraint row. Never reports an unproven value as optimum; on budget
// exhaustion the result carries proven=false and a valid [lower_bound, optimum]
// interval.
inline SolveResult solve_exact(const ConstraintSystem& cs, Millis budget = kDefaultBudget) {
    std::vector<Bitset> rows;
    rows.reserve(cs.constraints.size());
    for (const auto& pc : cs.constraints) rows.push_back(pc.resolvers);
    return solve_cover(cs.n_vertices, rows, budget);
}

// Iterative max-coverage over the full constraint system, ties to the
// smallest vertex id. Feasible by construction.
inline VertexSet greedy_cover(const ConstraintSystem& cs) {
    const int n = cs.n_vertices;
    std::vector<Bitset> cols(n, Bitset(int(cs.constraints.size())));
    for (std::size_t r = 0; r < cs.constraints.size(); ++r)
        cs.constraints[r].resolvers.for_each_set([&](int w) { cols[w].set(int(r)); });
    Bitset uncov(int(cs.constraints.size()));
    uncov.set_all();
    VertexSet out(n);
    while (uncov.any()) {
        int best_w = -1, best_c = 0;
        for (int w = 0; w < n; ++w) {
            int c = cols[w].intersection_count(uncov);
            if (c > best_c) {
                best_c = c;
                best_w = w;
            }
        }
        out.set(best_w);
        uncov.subtract(cols[best_w]);
    }
    return out;
}

struct LowerBound {
    int value = 0;
    bool proven = false;
};

namespace detail {

inline LowerBound cover_bound_of_pairs(const std::vector<std::pair<int, int>>& pairs,
                                       int n_vertices, Millis budget) {
    std::vector<Bitset> rows;
    rows.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        Bitset r(n_vertices);
        r.set(u);
        r.set(v);
        rows.push_back(std::move(r));
    }
    SolveResult res = solve_cover(n_vertices, rows, budget);
    return {res.proven ? res.optimum : res.lower_bound, res.proven};
}

} // namespace detail

// Minimum vertex cover of the diametral-pair graph. Every strong resolving
// set must contain an endpoint of each diametral pair, so this bounds sdim
// from below.
inline LowerBound lower_bound_diametral(const std::vector<std::pair<int, int>>& dp,
                                        int n_vertices, Millis budget = kDefaultBudget) {
    return detail::cover_bound_of_pairs(dp, n_vertices, budget);
}

// Minimum vertex cover of the MMD-pair graph; same argument, larger graph,
// hence a bound at least as strong.
inline LowerBound lower_bound_mmd(const MmdPairList& mmd, int n_vertices,
                                  Millis budget = kDefaultBudget) {
    return detail::cover_bound_of_pairs(mmd.pairs, n_vertices, budget);
}

struct BoundReport {
    LowerBound diametral_lb;
    LowerBound mmd_cover_lb;
    int greedy_ub = 0;
    std::optional<int> construction_ub;
};

inline BoundReport compute_bounds(const Graph& g, const DistanceMatrix& dm,
                                  const ConstraintSystem& cs, Millis budget = kDefaultBudget) {
    BoundReport rep;
    rep.diametral_lb = lower_bound_diametral(diametral_pairs(dm), g.n_vertices(), budget);
    rep.mmd_cover_lb = lower_bound_mmd(mmd_pairs(g, dm), g.n_vertices(), budget);
    rep.greedy_ub = greedy_cover(cs).count();
    return rep;
}

} // namespace sdim
