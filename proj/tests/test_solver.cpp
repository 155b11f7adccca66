#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "sdim/solver.hpp"

using namespace sdim;

namespace {

ConstraintSystem constraints_of(const Graph& g) {
    return build_constraints(all_pairs_distances(g));
}

// remove-one minimality of a cover
bool is_minimal(const ConstraintSystem& cs, const VertexSet& basis) {
    for (int w : basis.members()) {
        VertexSet reduced = basis;
        reduced.reset(w);
        if (verify_resolving_set(cs, reduced).ok()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("exact dimensions of the small flagship instances", "[solver]") {
    struct Row {
        int n, k, expect;
    };
    for (Row r : {Row{5, 2, 8}, Row{6, 2, 6}, Row{8, 2, 8}, Row{9, 2, 13}}) {
        Graph g = build_gp({r.n, r.k});
        auto cs = constraints_of(g);
        auto res = solve_exact(cs);
        INFO("GP(" << r.n << "," << r.k << ")");
        REQUIRE(res.proven);
        CHECK(res.optimum == r.expect);
        CHECK(res.lower_bound == r.expect);
        CHECK(res.basis.count() == res.optimum);
        CHECK(verify_resolving_set(cs, res.basis).ok());
        CHECK(is_minimal(cs, res.basis));
        CHECK(res.lower_bound_at_root <= res.optimum);
    }
}

TEST_CASE("single edge K_2", "[solver]") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    auto cs = constraints_of(g);
    auto res = solve_exact(cs);
    REQUIRE(res.proven);
    CHECK(res.optimum == 1);
    CHECK(greedy_cover(cs).count() == 1);
    auto dm = all_pairs_distances(g);
    CHECK(lower_bound_diametral(diametral_pairs(dm), 2).value == 1);
    CHECK(lower_bound_mmd(mmd_pairs(g, dm), 2).value == 1);
}

TEST_CASE("solver agrees with exhaustive enumeration on random graphs", "[solver]") {
    std::mt19937 rng(20240809);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 12);
        auto dm = all_pairs_distances(g);
        auto cs = build_constraints(dm);
        auto res = solve_exact(cs);
        REQUIRE(res.proven);
        INFO("trial " << trial << ", n=" << g.n_vertices());
        REQUIRE(res.optimum == oracle::exhaustive_sdim(g, dm));
        REQUIRE(verify_resolving_set(cs, res.basis).ok());
        REQUIRE(is_minimal(cs, res.basis));
    }
}

TEST_CASE("greedy cover is feasible and never beats the optimum", "[solver]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 11);
        auto cs = constraints_of(g);
        auto greedy = greedy_cover(cs);
        REQUIRE(verify_resolving_set(cs, greedy).ok());
        auto res = solve_exact(cs);
        REQUIRE(greedy.count() >= res.optimum);
    }
    auto cs = constraints_of(build_gp({5, 2}));
    CHECK(greedy_cover(cs).count() >= 8);
}

TEST_CASE("diametral cover bound", "[solver]") {
    // GP(14,2): fourteen antipodal diametral pairs force 14 vertices
    {
        Graph g = build_gp({14, 2});
        auto dm = all_pairs_distances(g);
        auto lb = lower_bound_diametral(diametral_pairs(dm), g.n_vertices());
        REQUIRE(lb.proven);
        CHECK(lb.value == 14);
    }
    // GP(8,2): equals the bitmask vertex-cover oracle
    {
        Graph g = build_gp({8, 2});
        auto dm = all_pairs_distances(g);
        auto dp = diametral_pairs(dm);
        auto lb = lower_bound_diametral(dp, g.n_vertices());
        REQUIRE(lb.proven);
        CHECK(lb.value == oracle::min_vertex_cover(dp, g.n_vertices()));
    }
}

TEST_CASE("MMD cover bound", "[solver]") {
    {
        Graph g = build_gp({5, 2});
        auto dm = all_pairs_distances(g);
        auto lb = lower_bound_mmd(mmd_pairs(g, dm), 10);
        REQUIRE(lb.proven);
        CHECK(lb.value == 8); // tight on the Petersen graph
    }
    {
        Graph g = build_gp({20, 2});
        auto dm = all_pairs_distances(g);
        auto lb = lower_bound_mmd(mmd_pairs(g, dm), 40);
        REQUIRE(lb.proven);
        CHECK(lb.value == 25); // 5k at k=5
    }
    {
        Graph g = build_gp({40, 2});
        auto dm = all_pairs_distances(g);
        auto lb = lower_bound_mmd(mmd_pairs(g, dm), 80);
        REQUIRE(lb.proven);
        CHECK(lb.value == 50); // 5k at k=10
    }
}

TEST_CASE("bound sandwich on random and GP instances", "[solver]") {
    std::mt19937 rng(99);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 15; ++trial)
        graphs.push_back(oracle::random_connected_graph(rng, 11));
    for (int n : {5, 6, 7, 8, 9, 10}) graphs.push_back(build_gp({n, 2}));
    for (const auto& g : graphs) {
        auto dm = all_pairs_distances(g);
        auto cs = build_constraints(dm);
        auto d_lb = lower_bound_diametral(diametral_pairs(dm), g.n_vertices());
        auto m_lb = lower_bound_mmd(mmd_pairs(g, dm), g.n_vertices());
        auto res = solve_exact(cs);
        auto greedy = greedy_cover(cs);
        REQUIRE(res.proven);
        REQUIRE(d_lb.value <= m_lb.value);
        REQUIRE(m_lb.value <= res.optimum);
        REQUIRE(res.optimum <= greedy.count());
    }
}

TEST_CASE("solver runs are deterministic", "[solver]") {
    auto cs = constraints_of(build_gp({9, 2}));
    auto a = solve_exact(cs);
    auto b = solve_exact(cs);
    CHECK(a.optimum == b.optimum);
    CHECK(a.basis == b.basis);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.lower_bound_at_root == b.lower_bound_at_root);
}

TEST_CASE("budget exhaustion returns an honest interval", "[solver]") {
    auto cs = constraints_of(build_gp({23, 2}));
    auto res = solve_exact(cs, Millis(0));
    CHECK_FALSE(res.proven);
    CHECK(res.lower_bound <= res.optimum);
    // the incumbent is still a feasible resolving set
    CHECK(verify_resolving_set(cs, res.basis).ok());
    // the true value (29) sits inside the reported interval
    CHECK(res.lower_bound <= 29);
    CHECK(29 <= res.optimum);
}

TEST_CASE("uncoverable rows are rejected", "[solver]") {
    std::vector<Bitset> rows{Bitset(3)};
    CHECK_THROWS_AS(solve_cover(3, rows), std::invalid_argument);
}
