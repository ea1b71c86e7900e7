#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "linarb/path_forest.hpp"

using namespace linarb;

namespace {

// Reference model: plain adjacency lists with BFS connectivity.
struct ModelForest {
    std::vector<std::vector<VertexId>> adj;
    explicit ModelForest(std::size_t n) : adj(n) {}

    std::size_t degree(VertexId v) const { return adj[v].size(); }

    bool connected(VertexId u, VertexId v) const {
        if (u == v) return true;
        std::vector<VertexId> stack{u};
        std::set<VertexId> seen{u};
        while (!stack.empty()) {
            VertexId a = stack.back();
            stack.pop_back();
            for (VertexId b : adj[a]) {
                if (b == v) return true;
                if (seen.insert(b).second) stack.push_back(b);
            }
        }
        return false;
    }

    void link(VertexId u, VertexId v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    void cut(VertexId u, VertexId v) {
        std::erase(adj[u], v);
        std::erase(adj[v], u);
    }
};

}  // namespace

TEST_CASE("path forest links, queries and cuts a small path") {
    PathForest f;
    CHECK(f.same_path(3, 3));
    CHECK(!f.same_path(1, 2));
    f.link(1, 2);
    f.link(3, 2);  // path 1-2-3
    f.link(3, 4);
    CHECK(f.same_path(1, 4));
    CHECK(f.same_path(4, 1));
    CHECK(!f.same_path(1, 5));
    f.cut(2, 3);
    CHECK(f.same_path(1, 2));
    CHECK(f.same_path(3, 4));
    CHECK(!f.same_path(1, 4));
    f.cut(1, 2);
    f.cut(3, 4);
    CHECK(f.node_count() == 0);
}

TEST_CASE("linking two ends of one path is rejected") {
    PathForest f;
    f.link(0, 1);
    f.link(1, 2);
    CHECK_THROWS_AS(f.link(2, 0), WouldCloseCycle);
    CHECK_THROWS_AS(f.link(0, 0), WouldCloseCycle);
    // still intact afterwards
    CHECK(f.same_path(0, 2));
}

TEST_CASE("path forest agrees with a BFS model under random churn") {
    constexpr std::size_t n = 40;
    std::mt19937_64 rng(20240817);
    PathForest f;
    ModelForest model(n);
    std::vector<std::pair<VertexId, VertexId>> links;

    for (int step = 0; step < 20000; ++step) {
        VertexId u = VertexId(rng() % n), v = VertexId(rng() % n);
        switch (rng() % 3) {
            case 0: {  // try to link if the model allows a path edge
                if (u == v || model.degree(u) >= 2 || model.degree(v) >= 2 ||
                    model.connected(u, v)) {
                    break;
                }
                f.link(u, v);
                model.link(u, v);
                links.emplace_back(u, v);
                break;
            }
            case 1: {  // cut a random existing edge
                if (links.empty()) break;
                std::size_t i = rng() % links.size();
                auto [a, b] = links[i];
                f.cut(a, b);
                model.cut(a, b);
                links[i] = links.back();
                links.pop_back();
                break;
            }
            default:
                REQUIRE(f.same_path(u, v) == model.connected(u, v));
        }
    }
    // full cross-check at the end
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            REQUIRE(f.same_path(u, v) == model.connected(u, v));
        }
    }
}
