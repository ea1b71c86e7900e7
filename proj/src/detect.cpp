#include <algorithm>

#include "linarb/reduce.hpp"

namespace linarb {

namespace {

// Candidate roots for a detection pass around v: every vertex within
// distance 2, ascending.
std::vector<VertexId> ball2(const Graph& g, VertexId v) {
    std::vector<VertexId> out{v};
    for (VertexId a : g.neighbors(v)) {
        out.push_back(a);
        for (VertexId b : g.neighbors(a)) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The two neighbors of a degree-2 vertex, ascending.
std::pair<VertexId, VertexId> two_neighbors(const Graph& g, VertexId v) {
    const auto& nb = g.neighbors(v);
    return {nb[0], nb[1]};
}

std::optional<Configuration> light_edge_at(const Graph& g, VertexId s, Color k) {
    for (VertexId w : g.neighbors(s)) {
        if (g.degree(s) + g.degree(w) <= 2 * std::size_t(k) + 1) {
            return Configuration{ConfigKind::LightEdge,
                                 {std::min(s, w), std::max(s, w)}};
        }
    }
    return std::nullopt;
}

std::optional<Configuration> two_vertex_nonadjacent_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 2) return std::nullopt;
    auto [u, z] = two_neighbors(g, s);
    if (g.adjacent(u, z)) return std::nullopt;
    return Configuration{ConfigKind::TwoVertexNonadjacent, {s, u, z}};
}

std::optional<Configuration> config_a_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 2) return std::nullopt;
    auto [u, v] = two_neighbors(g, s);
    if (!g.adjacent(u, v)) return std::nullopt;
    for (VertexId w : g.neighbors(u)) {
        if (w == s || w == v || g.degree(w) != 2) continue;
        if (g.adjacent(w, v)) {
            return Configuration{ConfigKind::ConfigA, {u, v, w, s}};
        }
    }
    return std::nullopt;
}

std::optional<Configuration> config_b_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 2) return std::nullopt;
    auto [n0, n1] = two_neighbors(g, s);
    for (auto [u, t] : {std::pair{n0, n1}, std::pair{n1, n0}}) {
        if (!g.adjacent(u, t)) continue;
        for (VertexId w : g.neighbors(u)) {
            if (w == s || g.degree(w) != 2) continue;
            auto [a, b] = two_neighbors(g, w);
            VertexId v = (a == u) ? b : a;
            if ((a != u && b != u) || v == t || v == s) continue;
            if (!g.adjacent(u, v)) continue;
            return Configuration{ConfigKind::ConfigB, {u, v, t, w, s}};
        }
    }
    return std::nullopt;
}

std::optional<Configuration> two_pairs_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 3) return std::nullopt;
    const auto& nb = g.neighbors(s);
    bool e01 = g.adjacent(nb[0], nb[1]);
    bool e02 = g.adjacent(nb[0], nb[2]);
    bool e12 = g.adjacent(nb[1], nb[2]);
    if (int(e01) + int(e02) + int(e12) != 2) return std::nullopt;
    // The middle neighbor sits on both induced edges.
    VertexId z, u, w;
    if (!e01) {
        z = nb[2], u = nb[0], w = nb[1];
    } else if (!e02) {
        z = nb[1], u = nb[0], w = nb[2];
    } else {
        z = nb[0], u = nb[1], w = nb[2];
    }
    return Configuration{ConfigKind::TwoPairs, {s, u, w, z}};
}

std::optional<Configuration> chorded_c4_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 2) return std::nullopt;
    auto [z, w] = two_neighbors(g, s);
    if (!g.adjacent(z, w)) return std::nullopt;
    for (VertexId v : g.neighbors(z)) {
        if (v == s || v == w || g.degree(v) != 3) continue;
        if (g.adjacent(v, w)) {
            return Configuration{ConfigKind::ChordedC4, {v, z, s, w}};
        }
    }
    return std::nullopt;
}

std::optional<Configuration> two_with_three_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 2) return std::nullopt;
    auto [n0, n1] = two_neighbors(g, s);
    if (!g.adjacent(n0, n1)) return std::nullopt;
    for (auto [v, w] : {std::pair{n0, n1}, std::pair{n1, n0}}) {
        for (VertexId z : g.neighbors(v)) {
            if (z == s || z == w || g.degree(z) != 3) continue;
            const auto& zn = g.neighbors(z);
            VertexId rest[2];
            int idx = 0;
            bool sees_v = false;
            for (VertexId t : zn) {
                if (t == v) {
                    sees_v = true;
                } else if (idx < 2) {
                    rest[idx++] = t;
                }
            }
            if (!sees_v || idx != 2) continue;
            VertexId x = rest[0], y = rest[1];
            if (x == s || y == s || x == w || y == w) continue;
            if (g.adjacent(v, x) && g.adjacent(v, y) && g.adjacent(x, y)) {
                return Configuration{ConfigKind::TwoWithThree, {s, v, w, z, x, y}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Configuration> cubic_small_at(const Graph& g, VertexId s, Color k) {
    std::size_t d = g.degree(s);
    if (d < 2 || d > 2 * std::size_t(k) - 1) return std::nullopt;
    std::vector<VertexId> cubic;
    for (VertexId t : g.neighbors(s)) {
        if (g.degree(t) == 3) cubic.push_back(t);
    }
    if (cubic.size() < 2) return std::nullopt;
    for (VertexId x : cubic) {
        const auto& xn = g.neighbors(x);
        VertexId rest[2];
        int idx = 0;
        for (VertexId t : xn) {
            if (t != s) rest[idx++] = t;
        }
        VertexId x1 = rest[0], x2 = rest[1];
        if (!(g.adjacent(x1, x2) || g.adjacent(x1, s) || g.adjacent(x2, s))) {
            continue;
        }
        for (VertexId y : cubic) {
            if (y == x || y == x1 || y == x2) continue;
            return Configuration{ConfigKind::CubicSmall, {s, x, x1, x2, y}};
        }
    }
    return std::nullopt;
}

std::optional<Configuration> two_cubic_at(const Graph& g, VertexId s) {
    if (g.degree(s) != 3) return std::nullopt;
    const auto& nb = g.neighbors(s);
    // s plays v; pick u among its neighbors, the other two are w and z.
    for (int ui = 0; ui < 3; ++ui) {
        VertexId u = nb[ui];
        VertexId w = nb[(ui + 1) % 3], z = nb[(ui + 2) % 3];
        if (w > z) std::swap(w, z);
        if (!g.adjacent(u, w) || !g.adjacent(u, z) || !g.adjacent(w, z)) continue;
        for (VertexId x : g.neighbors(w)) {
            if (x == s || x == u || x == z || g.degree(x) != 3) continue;
            if (!g.adjacent(x, z)) continue;
            const auto& xn = g.neighbors(x);
            VertexId y = 0;
            bool found = false;
            for (VertexId t : xn) {
                if (t != w && t != z) {
                    y = t;
                    found = true;
                }
            }
            if (!found || y == u || y == s) continue;
            if (g.adjacent(y, w) && g.adjacent(y, z)) {
                return Configuration{ConfigKind::TwoCubic, {u, s, w, z, x, y}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Configuration> detect_rooted(const Graph& g, ConfigKind kind,
                                           VertexId s, Color k) {
    switch (kind) {
        case ConfigKind::LightEdge: return light_edge_at(g, s, k);
        case ConfigKind::TwoVertexNonadjacent: return two_vertex_nonadjacent_at(g, s);
        case ConfigKind::ConfigA: return config_a_at(g, s);
        case ConfigKind::ConfigB: return config_b_at(g, s);
        case ConfigKind::TwoPairs: return two_pairs_at(g, s);
        case ConfigKind::ChordedC4: return chorded_c4_at(g, s);
        case ConfigKind::TwoWithThree: return two_with_three_at(g, s);
        case ConfigKind::CubicSmall: return cubic_small_at(g, s, k);
        case ConfigKind::TwoCubic: return two_cubic_at(g, s);
    }
    return std::nullopt;
}

bool all_distinct(const VertexId* v, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) return false;
        }
    }
    return true;
}

bool validate(const Graph& g, const Configuration& c, Color k) {
    const auto& a = c.at;
    auto adj = [&](VertexId p, VertexId q) { return g.adjacent(p, q); };
    switch (c.kind) {
        case ConfigKind::LightEdge:
            return adj(a[0], a[1]) &&
                   g.degree(a[0]) + g.degree(a[1]) <= 2 * std::size_t(k) + 1;
        case ConfigKind::TwoVertexNonadjacent:
            return all_distinct(a.data(), 3) && g.degree(a[0]) == 2 &&
                   adj(a[0], a[1]) && adj(a[0], a[2]) && !adj(a[1], a[2]);
        case ConfigKind::ConfigA:
            return all_distinct(a.data(), 4) && g.degree(a[2]) == 2 &&
                   g.degree(a[3]) == 2 && adj(a[0], a[1]) && adj(a[2], a[0]) &&
                   adj(a[2], a[1]) && adj(a[3], a[0]) && adj(a[3], a[1]);
        case ConfigKind::ConfigB:
            return all_distinct(a.data(), 5) && g.degree(a[3]) == 2 &&
                   g.degree(a[4]) == 2 && adj(a[0], a[1]) && adj(a[0], a[2]) &&
                   adj(a[3], a[0]) && adj(a[3], a[1]) && adj(a[4], a[0]) &&
                   adj(a[4], a[2]);
        case ConfigKind::TwoPairs:
            return all_distinct(a.data(), 4) && g.degree(a[0]) == 3 &&
                   adj(a[0], a[1]) && adj(a[0], a[2]) && adj(a[0], a[3]) &&
                   adj(a[1], a[3]) && adj(a[3], a[2]) && !adj(a[1], a[2]);
        case ConfigKind::ChordedC4:
            return all_distinct(a.data(), 4) && g.degree(a[2]) == 2 &&
                   g.degree(a[0]) == 3 && adj(a[2], a[1]) && adj(a[2], a[3]) &&
                   adj(a[1], a[3]) && adj(a[0], a[1]) && adj(a[0], a[3]);
        case ConfigKind::TwoWithThree:
            return all_distinct(a.data(), 6) && g.degree(a[0]) == 2 &&
                   g.degree(a[3]) == 3 && adj(a[0], a[1]) && adj(a[0], a[2]) &&
                   adj(a[1], a[2]) && adj(a[3], a[1]) && adj(a[3], a[4]) &&
                   adj(a[3], a[5]) && adj(a[1], a[4]) && adj(a[1], a[5]) &&
                   adj(a[4], a[5]);
        case ConfigKind::CubicSmall:
            return all_distinct(a.data(), 5) &&
                   g.degree(a[0]) <= 2 * std::size_t(k) - 1 &&
                   g.degree(a[1]) == 3 && g.degree(a[4]) == 3 &&
                   adj(a[1], a[0]) && adj(a[4], a[0]) && adj(a[1], a[2]) &&
                   adj(a[1], a[3]) &&
                   (adj(a[2], a[3]) || adj(a[2], a[0]) || adj(a[3], a[0]));
        case ConfigKind::TwoCubic:
            return all_distinct(a.data(), 6) && g.degree(a[1]) == 3 &&
                   g.degree(a[4]) == 3 && adj(a[0], a[1]) && adj(a[0], a[2]) &&
                   adj(a[0], a[3]) && adj(a[1], a[2]) && adj(a[1], a[3]) &&
                   adj(a[2], a[3]) && adj(a[2], a[4]) && adj(a[3], a[4]) &&
                   adj(a[2], a[5]) && adj(a[3], a[5]) && adj(a[4], a[5]);
    }
    return false;
}

}  // namespace

const char* config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::LightEdge: return "light-edge";
        case ConfigKind::TwoVertexNonadjacent: return "two-vertex-nonadjacent";
        case ConfigKind::ConfigA: return "shared-pair-a";
        case ConfigKind::ConfigB: return "shared-pair-b";
        case ConfigKind::TwoPairs: return "two-pairs";
        case ConfigKind::ChordedC4: return "chorded-c4";
        case ConfigKind::TwoWithThree: return "two-with-three";
        case ConfigKind::CubicSmall: return "cubic-small";
        case ConfigKind::TwoCubic: return "two-cubic";
    }
    return "?";
}

Color choose_k(std::size_t max_degree) {
    return std::max<Color>(static_cast<Color>((max_degree + 1) / 2), 5);
}

std::optional<Configuration> detect_at(const Graph& g, VertexId v, Color k) {
    // precondition (checked by the solvers once up front): max_degree <= 2k
    std::vector<VertexId> roots = ball2(g, v);
    constexpr ConfigKind order[] = {
        ConfigKind::LightEdge,    ConfigKind::TwoVertexNonadjacent,
        ConfigKind::ConfigA,      ConfigKind::ConfigB,
        ConfigKind::TwoPairs,     ConfigKind::ChordedC4,
        ConfigKind::TwoWithThree, ConfigKind::CubicSmall,
        ConfigKind::TwoCubic,
    };
    for (ConfigKind kind : order) {
        for (VertexId s : roots) {
            if (auto cfg = detect_rooted(g, kind, s, k)) return cfg;
        }
    }
    return std::nullopt;
}

ReductionStep apply_reduction(Graph& g, const Configuration& cfg, Color k) {
    if (!validate(g, cfg, k)) {
        throw StaleConfiguration(std::string("configuration ") +
                                 config_kind_name(cfg.kind) +
                                 " no longer matches the graph");
    }
    const auto& a = cfg.at;
    ReductionStep step{cfg, {}, {}};
    switch (cfg.kind) {
        case ConfigKind::LightEdge:
            step.removed = {Edge(a[0], a[1])};
            break;
        case ConfigKind::TwoVertexNonadjacent:
            step.removed = {Edge(a[1], a[0]), Edge(a[0], a[2])};
            step.added = {Edge(a[1], a[2])};
            break;
        case ConfigKind::ConfigA:
        case ConfigKind::ConfigB:
            // remove u-z
            step.removed = {Edge(a[0], cfg.kind == ConfigKind::ConfigA ? a[3] : a[4])};
            break;
        case ConfigKind::TwoPairs:
            step.removed = {Edge(a[1], a[0]), Edge(a[0], a[2]), Edge(a[0], a[3])};
            step.added = {Edge(a[1], a[2])};
            break;
        case ConfigKind::ChordedC4:
            step.removed = {Edge(a[2], a[1])};  // u-z
            break;
        case ConfigKind::TwoWithThree:
            step.removed = {Edge(a[0], a[1])};  // u-v
            break;
        case ConfigKind::CubicSmall:
            step.removed = {Edge(a[0], a[1])};  // v-x
            break;
        case ConfigKind::TwoCubic:
            step.removed = {Edge(a[0], a[1])};  // u-v
            break;
    }
    for (const Edge& e : step.removed) g.remove_edge(e.u, e.v);
    for (const Edge& e : step.added) {
        if (g.adjacent(e.u, e.v)) {
            // roll back before reporting
            for (const Edge& r : step.removed) g.add_edge(r.u, r.v);
            throw StaleConfiguration("surgery would create a parallel edge");
        }
        g.add_edge(e.u, e.v);
    }
    return step;
}

}  // namespace linarb
