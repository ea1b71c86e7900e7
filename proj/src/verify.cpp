#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_set>

#include "linarb/verify.hpp"

namespace linarb {

namespace {

// Union-find without path compression so unions can be rewound.
struct RewindableDsu {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;
    std::vector<std::uint32_t> merged;  // roots absorbed, newest last

    explicit RewindableDsu(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        merged.push_back(b);
        return true;
    }

    std::size_t mark() const { return merged.size(); }

    void rewind(std::size_t m) {
        while (merged.size() > m) {
            std::uint32_t b = merged.back();
            merged.pop_back();
            size[find(b)] -= size[b];
            parent[b] = b;
        }
    }
};

}  // namespace

VerificationReport verify(const Graph& g, Color k,
                          const std::vector<std::pair<Edge, Color>>& assignment) {
    VerificationReport rep;
    rep.class_sizes.assign(k, 0);
    rep.path_counts.assign(k, 0);
    auto fail = [&](std::string msg) {
        rep.valid = false;
        rep.message = std::move(msg);
        return rep;
    };

    std::size_t n = g.vertex_count();
    std::unordered_set<std::uint64_t> seen;
    // per color: degree counts and a union-find for cycle detection
    std::vector<std::vector<std::uint8_t>> deg(k);
    std::vector<RewindableDsu> dsu;
    dsu.reserve(k);
    for (Color c = 0; c < k; ++c) {
        deg[c].assign(n, 0);
        dsu.emplace_back(n);
    }

    for (const auto& [e, c] : assignment) {
        std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
        if (e.u >= n || e.v >= n) return fail("edge " + name + " out of range");
        if (e.u == e.v) return fail("self-loop " + name);
        if (c < 1 || c > k) {
            return fail("edge " + name + " has color " + std::to_string(c) +
                        " outside 1..=" + std::to_string(k));
        }
        if (!seen.insert(e.key()).second) return fail("edge " + name + " repeated");
        if (!g.adjacent(e.u, e.v)) return fail("edge " + name + " not in the graph");
        auto& d = deg[c - 1];
        if (d[e.u] >= 2 || d[e.v] >= 2) {
            return fail("color " + std::to_string(c) +
                        " has three edges at an endpoint of " + name);
        }
        if (!dsu[c - 1].unite(e.u, e.v)) {
            return fail("color " + std::to_string(c) + " has a cycle through " + name);
        }
        ++d[e.u];
        ++d[e.v];
        ++rep.class_sizes[c - 1];
    }

    if (seen.size() != g.edge_count()) {
        return fail("coloring covers " + std::to_string(seen.size()) + " of " +
                    std::to_string(g.edge_count()) + " edges");
    }

    // Each color class is now a forest with degrees <= 2: a disjoint union
    // of paths.  Count them (components with at least one edge).
    for (Color c = 0; c < k; ++c) {
        if (rep.class_sizes[c] > 0) ++rep.colors_used;
        std::unordered_set<std::uint32_t> roots;
        for (VertexId v = 0; v < n; ++v) {
            if (deg[c][v] > 0) roots.insert(dsu[c].find(v));
        }
        rep.path_counts[c] = roots.size();
    }
    rep.valid = true;
    return rep;
}

VerificationReport verify(const Graph& g, const LinearColoring& col) {
    return verify(g, col.num_colors(), col.assignment());
}

namespace {

bool la_feasible(const std::vector<Edge>& edges, std::size_t n, Color k) {
    std::vector<std::vector<std::uint8_t>> deg(k, std::vector<std::uint8_t>(n, 0));
    std::vector<RewindableDsu> dsu(k, RewindableDsu(n));

    // Depth-first over edges; a new color may only be opened in order, so
    // each partition is enumerated once.
    std::function<bool(std::size_t, Color)> go = [&](std::size_t i,
                                                     Color used) -> bool {
        if (i == edges.size()) return true;
        const Edge& e = edges[i];
        Color limit = std::min<Color>(k, used + 1);
        for (Color c = 1; c <= limit; ++c) {
            auto& d = deg[c - 1];
            if (d[e.u] >= 2 || d[e.v] >= 2) continue;
            auto m = dsu[c - 1].mark();
            if (!dsu[c - 1].unite(e.u, e.v)) continue;
            ++d[e.u];
            ++d[e.v];
            if (go(i + 1, std::max(used, c))) return true;
            --d[e.u];
            --d[e.v];
            dsu[c - 1].rewind(m);
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

Color brute_force_la(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    if (edges.size() > 18) {
        throw TooLarge("exact search limited to 18 edges, got " +
                       std::to_string(edges.size()));
    }
    if (edges.empty()) return 0;
    std::size_t n = g.vertex_count();
    Color lo = static_cast<Color>((g.max_degree() + 1) / 2);
    if (n > 1) {
        Color density = static_cast<Color>((edges.size() + n - 2) / (n - 1));
        lo = std::max(lo, density);
    }
    lo = std::max<Color>(lo, 1);
    for (Color c = lo;; ++c) {
        if (la_feasible(edges, n, c)) return c;
    }
}

Graph gen_planar(std::size_t n, std::size_t target_delta, std::uint64_t seed) {
    if (n < 3) throw InvalidParams("planar generator needs n >= 3");
    if (target_delta < 2) throw InvalidParams("target max degree must be >= 2");
    std::mt19937_64 rng(seed);

    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    // Faces as vertex triples; both sides of the starting triangle count.
    std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
    faces.reserve(2 * n);
    for (VertexId v = 3; v < n; ++v) {
        std::size_t f = rng() % faces.size();
        auto [a, b, c] = faces[f];
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }

    // One pass suffices: degrees only drop afterwards, so earlier vertices
    // stay within the bound.
    for (VertexId v = 0; v < n; ++v) {
        while (g.degree(v) > target_delta) {
            VertexId t = g.neighbors(v)[rng() % g.degree(v)];
            g.remove_edge(v, t);
        }
    }
    return g;
}

}  // namespace linarb
