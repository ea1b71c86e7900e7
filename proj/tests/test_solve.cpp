#include <doctest.h>

#include <algorithm>
#include <set>

#include "linarb/errors.hpp"
#include "linarb/solve.hpp"
#include "linarb/verify.hpp"

using namespace linarb;

namespace {

Graph wheel(std::size_t rim) {
    Graph g(rim + 1);
    for (std::size_t i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

Graph octahedron() {
    Graph g(6);
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v)
            if (u + v != 5) g.add_edge(u, v);
    return g;
}

std::set<Edge> edge_set(const Graph& g) {
    auto es = g.edges();
    return {es.begin(), es.end()};
}

void solve_and_verify(Graph& g, Color expect_k = 0, Engine engine = Engine::Auto) {
    auto before = edge_set(g);
    auto col = solve(g, expect_k, engine);
    CHECK(edge_set(g) == before);
    auto rep = verify(g, col);
    CAPTURE(rep.message);
    CHECK(rep.valid);
    Color budget = expect_k ? expect_k : choose_k(g.max_degree());
    CHECK(col.colors_used() <= budget);
}

}  // namespace

TEST_CASE("bounded engine colors small dense graphs") {
    Graph g = octahedron();
    solve_and_verify(g);
    Graph w = wheel(9);
    solve_and_verify(w);
    Graph k4(4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    solve_and_verify(k4);
}

TEST_CASE("bounded engine handles trees, cycles, and empty graphs") {
    Graph empty(5);
    solve_and_verify(empty);

    Graph path(6);
    for (VertexId i = 0; i + 1 < 6; ++i) path.add_edge(i, i + 1);
    solve_and_verify(path);

    Graph cycle(7);
    for (VertexId i = 0; i < 7; ++i) cycle.add_edge(i, (i + 1) % 7);
    solve_and_verify(cycle);

    Graph star(11);
    for (VertexId i = 1; i < 11; ++i) star.add_edge(0, i);
    solve_and_verify(star);
}

TEST_CASE("bounded engine on generated planar graphs with degree at most 10") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = gen_planar(150, 9, seed);
        REQUIRE(g.max_degree() <= 10);
        solve_and_verify(g, 0, Engine::Bounded);
    }
}

TEST_CASE("high-degree engine on generated planar graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = gen_planar(400, 14, seed);
        if (g.max_degree() < 11) continue;
        solve_and_verify(g, 0, Engine::High);
    }
}

TEST_CASE("dispatcher picks an engine from the max degree") {
    Graph low = gen_planar(120, 9, 3);
    solve_and_verify(low);
    Graph high = gen_planar(300, 16, 3);
    if (high.max_degree() >= 11) solve_and_verify(high);
}

TEST_CASE("solver records a replayable trace") {
    Graph g = wheel(9);
    ReductionTrace trace;
    auto col = solve(g, 0, Engine::Auto, &trace);
    CHECK(!trace.empty());
    // every recorded step names a recognised configuration
    for (const auto& step : trace)
        CHECK(config_kind_name(step.config.kind) != nullptr);
    CHECK(verify(g, col).valid);
}

TEST_CASE("engine and budget preconditions are enforced") {
    Graph low = wheel(9);  // max degree 9
    CHECK_THROWS_AS(solve_highdegree(low, 6), InvalidParams);
    CHECK_THROWS_AS(solve(low, 4), InvalidParams);  // below choose_k = 5

    Graph high = gen_planar(200, 15, 1);
    if (high.max_degree() >= 11) {
        CHECK_THROWS_AS(solve_bounded(high, 8), InvalidParams);
        CHECK_THROWS_AS(solve(high, choose_k(high.max_degree()) - 1),
                        InvalidParams);
    }
}

TEST_CASE("extra colors beyond the default budget are accepted") {
    Graph g = wheel(9);
    auto col = solve(g, 7);
    CHECK(verify(g, col).valid);
    CHECK(col.colors_used() <= 7);
}

TEST_CASE("edge niceness classification") {
    // degree-sum rule: endpoints 3+3 in K4 gives weight 6 <= 13
    Graph k4(4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(is_nice(k4, 0, 1, 6));

    // pendant rule: an edge at a 1-vertex is nice regardless of the far end
    Graph star(16);
    for (VertexId i = 1; i < 16; ++i) star.add_edge(0, i);
    CHECK(is_nice(star, 0, 1, 8));

    // 2-vertex rule: one endpoint of degree 2, the other at most 2k-1
    Graph g(16);
    for (VertexId i = 1; i <= 12; ++i) g.add_edge(0, i);
    g.add_edge(0, 14);   // deg(0) = 13 = 2k-1 for k = 7
    g.add_edge(14, 15);  // deg(14) = 2
    CHECK(is_nice(g, 0, 14, 7));
    // pushing the far endpoint past 2k-1 breaks the rule
    g.add_edge(0, 13);  // deg(0) = 14
    CHECK_FALSE(is_nice(g, 0, 14, 7));
}

TEST_CASE("solving twice from the restored graph is deterministic") {
    Graph g = gen_planar(200, 10, 7);
    auto first = solve(g);
    auto second = solve(g);
    CHECK(first.assignment() == second.assignment());
}
