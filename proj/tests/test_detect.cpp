#include <doctest.h>

#include <utility>
#include <vector>

#include "linarb/errors.hpp"
#include "linarb/reduce.hpp"

using namespace linarb;

namespace {

// Edge-list builder with a padding helper: pad(v, s) raises deg(v) by s by
// attaching v to a fresh 11-clique with a few internal edges removed, so all
// new vertices have degree >= 9 and no new edge has weight <= 11.  With
// k = 5 this keeps every padded fixture free of unintended light edges,
// 2-vertices and 3-vertices.
struct Builder {
    std::vector<std::pair<VertexId, VertexId>> list;
    VertexId next = 0;

    void edge(VertexId a, VertexId b) {
        list.emplace_back(a, b);
        if (a >= next) next = a + 1;
        if (b >= next) next = b + 1;
    }

    void pad(VertexId v, int s) {
        REQUIRE(s <= 10);
        VertexId base = next;
        next += 11;
        int gaps = (s + 1) / 2;
        for (int i = 0; i < 11; ++i) {
            for (int j = i + 1; j < 11; ++j) {
                if (j == i + 1 && i % 2 == 0 && i / 2 < gaps) continue;
                edge(base + i, base + j);
            }
        }
        for (int i = 0; i < s; ++i) edge(v, base + i);
    }

    Graph build() const {
        Graph g(next);
        for (auto& e : list) g.add_edge(e.first, e.second);
        return g;
    }
};

}  // namespace

TEST_CASE("color budget for a given maximum degree") {
    CHECK(choose_k(0) == 5);
    CHECK(choose_k(1) == 5);
    CHECK(choose_k(4) == 5);
    CHECK(choose_k(9) == 5);
    CHECK(choose_k(10) == 5);
    CHECK(choose_k(11) == 6);
    CHECK(choose_k(12) == 6);
    CHECK(choose_k(13) == 7);
    CHECK(choose_k(100) == 50);
}

TEST_CASE("light edge is found on small graphs") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::LightEdge);
}

TEST_CASE("no configuration in a plain 11-clique") {
    Builder b;
    for (int i = 0; i < 11; ++i) {
        for (int j = i + 1; j < 11; ++j) b.edge(i, j);
    }
    Graph g = b.build();
    for (VertexId v = 0; v < 11; ++v) CHECK_FALSE(detect_at(g, v, 5).has_value());
}

TEST_CASE("2-vertex with nonadjacent neighbors: contraction surgery") {
    // K_{2,10}: hubs 0,1 of degree 10, middles 2..11 of degree 2.
    Builder b;
    for (VertexId i = 2; i < 12; ++i) {
        b.edge(0, i);
        b.edge(1, i);
    }
    Graph g = b.build();
    auto cfg = detect_at(g, 2, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::TwoVertexNonadjacent);
    VertexId v = cfg->at[0], u = cfg->at[1], z = cfg->at[2];
    CHECK(g.degree(v) == 2);
    CHECK_FALSE(g.adjacent(u, z));

    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 2);
    REQUIRE(step.added.size() == 1);
    CHECK(g.degree(v) == 0);
    CHECK(g.adjacent(u, z));
    CHECK(g.edge_count() == 19);
}

TEST_CASE("two 2-vertices over the same adjacent pair") {
    // Hubs 0,1 adjacent, sharing nine 2-vertex neighbors 2..10.
    Builder b;
    b.edge(0, 1);
    for (VertexId i = 2; i < 11; ++i) {
        b.edge(0, i);
        b.edge(1, i);
    }
    Graph g = b.build();
    auto cfg = detect_at(g, 2, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::ConfigA);
    VertexId w = cfg->at[2], z = cfg->at[3];
    CHECK(g.degree(w) == 2);
    CHECK(g.degree(z) == 2);

    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());

    SUBCASE("a pendant light edge takes priority") {
        Graph g2 = b.build();
        // re-use the builder: hang a degree-1 vertex off a 2-vertex
        Builder b2 = b;
        b2.edge(2, 11);
        Graph g3 = b2.build();
        auto cfg3 = detect_at(g3, 2, 5);
        REQUIRE(cfg3.has_value());
        CHECK(cfg3->kind == ConfigKind::LightEdge);
        (void)g2;
    }
}

TEST_CASE("two 2-vertices sharing exactly one neighbor") {
    // u=0, v=1, t=2; w=3 on edge u-v, z=4 on edge u-t.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(0, 3);
    b.edge(1, 3);
    b.edge(0, 4);
    b.edge(2, 4);
    b.pad(0, 6);
    b.pad(1, 8);
    b.pad(2, 8);
    Graph g = b.build();
    CHECK(g.max_degree() == 10);
    auto cfg = detect_at(g, 3, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::ConfigB);
    CHECK(g.degree(cfg->at[3]) == 2);
    CHECK(g.degree(cfg->at[4]) == 2);

    std::size_t m = g.edge_count();
    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());
    CHECK(g.edge_count() == m - 1);
}

TEST_CASE("3-vertex whose neighborhood induces exactly two edges") {
    // v=0 adjacent to u=1, w=2, z=3; edges u-z and z-w present, u-w absent.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(0, 3);
    b.edge(1, 3);
    b.edge(3, 2);
    b.pad(1, 7);
    b.pad(2, 7);
    b.pad(3, 6);
    Graph g = b.build();
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::TwoPairs);
    CHECK(cfg->at[0] == 0);

    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 3);
    REQUIRE(step.added.size() == 1);
    CHECK(g.degree(0) == 0);
    CHECK(g.adjacent(1, 2));
}

TEST_CASE("chorded 4-cycle with a 2-vertex and a 3-vertex") {
    // u=0 (degree 2) and v=3 (degree 3) opposite on cycle u-z-v-w, chord z-w.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(1, 2);
    b.edge(3, 1);
    b.edge(3, 2);
    b.edge(3, 4);
    b.pad(1, 7);
    b.pad(2, 7);
    b.pad(4, 8);
    Graph g = b.build();
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::ChordedC4);
    CHECK(g.degree(cfg->at[0]) == 3);
    CHECK(g.degree(cfg->at[2]) == 2);

    std::size_t m = g.edge_count();
    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());
    CHECK(g.edge_count() == m - 1);
    CHECK(g.degree(0) == 1);
}

TEST_CASE("2-vertex triangle hanging off a 4-clique") {
    // u=0 (degree 2) on v-w; z=3 (degree 3) in the clique {v,z,x,y}.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(1, 2);
    b.edge(1, 3);
    b.edge(1, 4);
    b.edge(1, 5);
    b.edge(3, 4);
    b.edge(3, 5);
    b.edge(4, 5);
    b.pad(1, 5);
    b.pad(2, 8);
    b.pad(4, 6);
    b.pad(5, 6);
    Graph g = b.build();
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::TwoWithThree);
    CHECK(g.degree(cfg->at[0]) == 2);
    CHECK(g.degree(cfg->at[3]) == 3);

    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());
}

TEST_CASE("small vertex with two 3-neighbors") {
    // v=0 with cubic neighbors x=1 and y=2; x's other neighbors x1=3, x2=4
    // are adjacent to each other.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(1, 3);
    b.edge(1, 4);
    b.edge(3, 4);
    b.edge(2, 5);
    b.edge(2, 6);
    b.pad(0, 7);
    b.pad(3, 7);
    b.pad(4, 7);
    b.pad(5, 8);
    b.pad(6, 8);
    Graph g = b.build();
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::CubicSmall);
    CHECK(g.degree(cfg->at[0]) <= 9);
    CHECK(g.degree(cfg->at[1]) == 3);
    CHECK(g.degree(cfg->at[4]) == 3);

    std::size_t m = g.edge_count();
    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());
    CHECK(g.edge_count() == m - 1);
}

TEST_CASE("two 3-vertices in the dense 6-vertex pattern") {
    // u=0, v=1, w=2, z=3, x=4, y=5 with the full 11-edge pattern.
    Builder b;
    b.edge(0, 1);
    b.edge(0, 2);
    b.edge(0, 3);
    b.edge(1, 2);
    b.edge(1, 3);
    b.edge(2, 3);
    b.edge(2, 4);
    b.edge(2, 5);
    b.edge(3, 4);
    b.edge(3, 5);
    b.edge(4, 5);
    b.pad(0, 6);
    b.pad(5, 6);
    b.pad(2, 5);
    b.pad(3, 5);
    Graph g = b.build();
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(4) == 3);
    auto cfg = detect_at(g, 1, 5);
    REQUIRE(cfg.has_value());
    CHECK(cfg->kind == ConfigKind::TwoCubic);

    auto step = apply_reduction(g, *cfg, 5);
    CHECK(step.removed.size() == 1);
    CHECK(step.added.empty());
}

TEST_CASE("stale configurations are rejected") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto cfg = detect_at(g, 0, 5);
    REQUIRE(cfg.has_value());
    REQUIRE(cfg->kind == ConfigKind::LightEdge);
    g.remove_edge(cfg->at[0], cfg->at[1]);
    CHECK_THROWS_AS(apply_reduction(g, *cfg, 5), StaleConfiguration);

    // a fabricated 2-vertex claim over a triangle is also stale
    Graph t(3);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(0, 2);
    Configuration fake;
    fake.kind = ConfigKind::TwoVertexNonadjacent;
    fake.at = {1, 0, 2, 0, 0, 0};
    CHECK_THROWS_AS(apply_reduction(t, fake, 5), StaleConfiguration);
}

TEST_CASE("configuration kinds have stable names") {
    CHECK(std::string(config_kind_name(ConfigKind::LightEdge)) == "light-edge");
    CHECK(std::string(config_kind_name(ConfigKind::TwoCubic)) == "two-cubic");
}
