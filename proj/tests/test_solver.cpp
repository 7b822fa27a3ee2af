#include <doctest.h>

#include "frustra/errors.hpp"
#include "frustra/graph.hpp"
#include "frustra/solver.hpp"
#include "oracles.hpp"

using namespace frustra;

namespace {

SignedGraph negative_triangle() { return SignedGraph(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}}); }

} // namespace

TEST_CASE("brute force") {
    SUBCASE("all-positive graph has L = 0") {
        SignedGraph g = oracles::random_graph(10, 0.5, 0.0, 5);
        auto r = brute_force(g);
        CHECK(r.exact);
        CHECK(r.upper_bound == 0);
    }
    SUBCASE("negative triangle has L = 1") {
        auto r = brute_force(negative_triangle());
        CHECK(r.upper_bound == 1);
        CHECK(frustration_count(negative_triangle(), r.colouring) == 1);
    }
    SUBCASE("cap refusal points to solve_exact") {
        SignedGraph big(26, {{0, 1, 1}});
        CHECK_THROWS_WITH_AS(brute_force(big), doctest::Contains("solve_exact"), ContractError);
    }
    SUBCASE("matches independent enumeration") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            SignedGraph g = oracles::random_graph(4 + static_cast<int>(seed % 7), 0.5, 0.5, seed);
            CHECK(brute_force(g).upper_bound == oracles::exhaustive_min(g));
        }
    }
}

TEST_CASE("lower bound packing") {
    SUBCASE("balanced graphs pack nothing") {
        SignedGraph g = oracles::random_graph(12, 0.4, 0.0, 3);
        CHECK(lower_bound_pack(g) == 0);
        auto sw = switch_signs(g, {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0});
        CHECK(lower_bound_pack(sw) == 0); // switching keeps it balanced
    }
    SUBCASE("two edge-disjoint negative triangles give 2") {
        SignedGraph g(6, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}, {3, 4, 1}, {4, 5, 1}, {3, 5, -1}});
        CHECK(lower_bound_pack(g) == 2);
    }
    SUBCASE("always a valid lower bound") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            SignedGraph g = oracles::random_graph(5 + static_cast<int>(seed % 8), 0.5, 0.5, seed);
            CHECK(lower_bound_pack(g) <= oracles::exhaustive_min(g));
        }
    }
    SUBCASE("finds negative four and five cycles") {
        SignedGraph c4 = oracles::cycle_graph(4, 1);
        SignedGraph c4n(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
        CHECK(lower_bound_pack(c4) == 0);
        CHECK(lower_bound_pack(c4n) == 1);
        SignedGraph c5n(5, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
        CHECK(lower_bound_pack(c5n) == 1);
    }
}

TEST_CASE("local search") {
    SolverConfig cfg;
    cfg.seed = 11;
    SUBCASE("reaches zero on balanced graphs") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SignedGraph base = oracles::random_graph(12, 0.45, 0.0, seed);
            std::mt19937_64 rng(seed);
            std::vector<std::uint8_t> s(12);
            for (auto& b : s) b = rng() & 1;
            SignedGraph g = switch_signs(base, s); // balanced with negative edges
            auto r = local_search(g, cfg);
            CHECK(r.upper_bound == 0);
            CHECK(is_balanced(g).balanced);
        }
    }
    SUBCASE("negative triangle lands on the optimum") {
        auto r = local_search(negative_triangle(), cfg);
        CHECK(r.upper_bound == 1);
        CHECK(r.exact); // packing certifies 1
    }
    SUBCASE("never beats the optimum and respects the standing bounds") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            SignedGraph g = oracles::random_graph(10, 0.5, 0.5, seed + 500);
            auto r = local_search(g, cfg);
            int opt = oracles::exhaustive_min(g);
            CHECK(r.upper_bound >= opt);
            CHECK(r.lower_bound <= opt);
            CHECK(r.upper_bound <= g.negative_edge_count());
            CHECK(r.upper_bound <= g.edge_count() / 2);
        }
    }
}

TEST_CASE("solve_exact matches brute force on random graphs") {
    SolverConfig cfg;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        SignedGraph g = oracles::random_graph(n, 0.4, (seed % 3 + 1) * 0.25, seed);
        auto exact = solve_exact(g, cfg);
        CHECK(exact.exact);
        CHECK(exact.upper_bound == oracles::exhaustive_min(g));
        CHECK(frustration_count(g, exact.colouring) == exact.upper_bound);
    }
}

TEST_CASE("solve_exact structural properties") {
    SolverConfig cfg;
    cfg.seed = 77;
    SUBCASE("L = 0 iff balanced") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SignedGraph g = oracles::random_graph(11, 0.35, 0.4, seed + 40);
            auto r = solve_exact(g, cfg);
            CHECK((r.upper_bound == 0) == is_balanced(g).balanced);
        }
    }
    SUBCASE("switching invariance") {
        SignedGraph g = oracles::random_graph(12, 0.45, 0.5, 17);
        int base = solve_exact(g, cfg).upper_bound;
        std::mt19937_64 rng(99);
        for (int t = 0; t < 20; ++t) {
            std::vector<std::uint8_t> s(12);
            for (auto& b : s) b = rng() & 1;
            CHECK(solve_exact(switch_signs(g, s), cfg).upper_bound == base);
        }
    }
    SUBCASE("additivity over disjoint unions") {
        SignedGraph a = oracles::random_graph(8, 0.5, 0.5, 1);
        SignedGraph b = oracles::random_graph(7, 0.5, 0.25, 2);
        std::vector<SignedEdge> edges(a.edges().begin(), a.edges().end());
        for (const auto& e : b.edges()) edges.push_back({e.u + 8, e.v + 8, e.sign});
        SignedGraph whole(15, std::move(edges));
        CHECK(solve_exact(whole, cfg).upper_bound ==
              solve_exact(a, cfg).upper_bound + solve_exact(b, cfg).upper_bound);
    }
    SUBCASE("determinism for a fixed seed") {
        SignedGraph g = oracles::random_graph(14, 0.4, 0.5, 23);
        auto r1 = solve_exact(g, cfg);
        auto r2 = solve_exact(g, cfg);
        CHECK(r1.upper_bound == r2.upper_bound);
        CHECK(r1.lower_bound == r2.lower_bound);
        CHECK(r1.colouring == r2.colouring);
        CHECK(r1.nodes_explored == r2.nodes_explored);
    }
}

TEST_CASE("gap and time limited solves stay sound") {
    SUBCASE("gap target can stop early") {
        SolverConfig cfg;
        cfg.target_gap = 1.0;
        SignedGraph g = oracles::random_graph(14, 0.5, 0.5, 3);
        auto r = solve_exact(g, cfg);
        CHECK(r.lower_bound <= r.upper_bound);
        CHECK(r.upper_bound >= oracles::exhaustive_min(g));
        CHECK(r.lower_bound <= oracles::exhaustive_min(g));
    }
    SUBCASE("expired time limit still returns ordered bounds") {
        SolverConfig cfg;
        cfg.time_limit = 0.0;
        SignedGraph g = oracles::random_graph(14, 0.5, 0.5, 4);
        auto r = solve_exact(g, cfg);
        CHECK(r.lower_bound <= r.upper_bound);
        CHECK(frustration_count(g, r.colouring) == r.upper_bound);
    }
}
