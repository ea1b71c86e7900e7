#include <algorithm>
#include <deque>
#include <sstream>

#include "linarb/solve.hpp"

namespace linarb {

namespace {

std::string residue_summary(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " remaining_edges=" << g.edge_count()
       << " max_degree=" << g.max_degree() << " sample=";
    int shown = 0;
    for (const Edge& e : g.edges()) {
        if (shown++ == 8) {
            os << " ...";
            break;
        }
        os << " " << e.u << "-" << e.v;
    }
    return os.str();
}

// Rebuilds the coloring by extending it across each step's removed edges,
// newest step first.  The extensions read structure from the coloring alone,
// so the graph is restored in a single bulk pass instead of edge-by-edge.
LinearColoring replay(Graph& g, const Graph::Snapshot& original,
                      const ReductionTrace& trace, Color k) {
    g.restore(original);
    LinearColoring col(g.vertex_count(), k);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        col.reserve_incident(v, original.degree(v));
    }
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) extend(col, *it);
    return col;
}

}  // namespace

LinearColoring solve_bounded(Graph& g, Color k, ReductionTrace* trace_out) {
    if (g.max_degree() > 10) {
        throw InvalidParams("bounded engine requires max degree <= 10");
    }
    if (k < choose_k(g.max_degree())) {
        throw InvalidParams("k=" + std::to_string(k) + " is below the target " +
                            std::to_string(choose_k(g.max_degree())));
    }

    std::size_t n = g.vertex_count();
    Graph::Snapshot original = g.snapshot();
    ReductionTrace trace;
    trace.reserve(g.edge_count());
    std::deque<VertexId> work;
    std::vector<char> queued(n, 1);
    for (VertexId v = 0; v < n; ++v) work.push_back(v);

    auto enqueue = [&](VertexId v) {
        if (!queued[v]) {
            queued[v] = 1;
            work.push_back(v);
        }
    };

    while (g.edge_count() > 0) {
        if (work.empty()) {
            throw NoConfigurationFound("reduction stalled: " + residue_summary(g));
        }
        VertexId v = work.front();
        work.pop_front();
        queued[v] = 0;
        auto cfg = detect_at(g, v, k);
        if (!cfg) continue;
        ReductionStep step = apply_reduction(g, *cfg, k);
        // Every configuration enabled by this surgery involves a vertex whose
        // degree or adjacency changed, i.e. an endpoint of a modified edge.
        // detect_at scans roots two hops out, so re-queueing the endpoints
        // and their neighbors covers everything within three hops.
        auto touch = [&](const Edge& e) {
            for (VertexId s : {e.u, e.v}) {
                enqueue(s);
                for (VertexId t : g.neighbors(s)) enqueue(t);
            }
        };
        for (const Edge& e : step.removed) touch(e);
        for (const Edge& e : step.added) touch(e);
        trace.push_back(std::move(step));
    }

    LinearColoring col = replay(g, original, trace, k);
    if (trace_out) *trace_out = std::move(trace);
    return col;
}

struct HighResult {
    LinearColoring col;
    ReductionTrace trace;
};

// The queue-driven engine proper; precondition checks and vertex relabeling
// live in solve_highdegree below.
static HighResult run_highdegree(Graph& g, Color k) {
    const std::size_t two_k = 2 * std::size_t(k);
    const std::size_t n = g.vertex_count();

    std::deque<Edge> q_edges;
    std::deque<VertexId> q_two;
    // Per-vertex remembered triangle: a 2-vertex seen earlier plus the
    // third corner it shares with this vertex.
    std::unordered_map<VertexId, std::pair<VertexId, VertexId>> triangles;

    // Degrees mirrored one byte per vertex, saturated at 255, so the hot
    // re-tests after each removal touch a quarter of the cache lines a
    // full-width degree array would.  Values below 255 are exact; 255 means
    // "at least 255" and falls back to the real degree where it matters.
    std::vector<std::uint8_t> deg8(n);
    auto refresh = [&](VertexId x) {
        deg8[x] = static_cast<std::uint8_t>(
            std::min<std::size_t>(g.degree(x), 255));
    };
    for (VertexId v = 0; v < n; ++v) refresh(v);

    auto eq_deg = [&](VertexId x, std::size_t val) {
        if (deg8[x] != 255) return std::size_t(deg8[x]) == val;
        return val >= 255 && g.degree(x) == val;
    };
    auto le_deg = [&](VertexId x, std::size_t limit) {
        if (deg8[x] != 255) return std::size_t(deg8[x]) <= limit;
        return limit >= 255 && g.degree(x) <= limit;
    };
    auto nice8 = [&](VertexId u, VertexId v) {
        unsigned du = deg8[u], dv = deg8[v];
        if (du + dv <= 13) return true;
        if (du == 1 || dv == 1) return true;
        if (du == 2) return le_deg(v, two_k - 1);
        if (dv == 2) return le_deg(u, two_k - 1);
        return false;
    };
    auto in_q_two = [&](VertexId v) {
        return deg8[v] == 2 && eq_deg(g.neighbors(v)[0], two_k) &&
               eq_deg(g.neighbors(v)[1], two_k);
    };
    for (const Edge& e : g.edges()) {
        if (is_nice(g, e.u, e.v, k)) q_edges.push_back(e);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (in_q_two(v)) q_two.push_back(v);
    }

    // Re-tests edges around each endpoint after e was removed.  An edge can
    // become nice because an endpoint's degree dropped into the weight range
    // (<= 12), became 1 or 2, or reached 2k-1 next to a 2-vertex.
    auto update_after_removal = [&](VertexId a, VertexId b) {
        for (VertexId s : {a, b}) {
            if (deg8[s] <= 12 || eq_deg(s, two_k - 1)) {
                for (VertexId t : g.neighbors(s)) {
                    if (nice8(s, t)) q_edges.push_back(Edge(s, t));
                }
            }
            if (in_q_two(s)) q_two.push_back(s);
        }
    };

    // Remembered triangle at v, dropped if the graph moved on under it.
    auto triangle_at = [&](VertexId v)
        -> std::optional<std::pair<VertexId, VertexId>> {
        auto it = triangles.find(v);
        if (it == triangles.end()) return std::nullopt;
        auto [two, other] = it->second;
        if (eq_deg(two, 2) && g.adjacent(two, v) && g.adjacent(two, other) &&
            g.adjacent(v, other)) {
            return it->second;
        }
        triangles.erase(it);
        return std::nullopt;
    };

    Graph::Snapshot original = g.snapshot();
    ReductionTrace trace;
    trace.reserve(g.edge_count());
    auto record_removal = [&](Configuration cfg, Edge e) {
        g.remove_edge(e.u, e.v);
        refresh(e.u);
        refresh(e.v);
        trace.push_back(ReductionStep{cfg, {e}, {}});
        update_after_removal(e.u, e.v);
    };

    while (g.edge_count() > 0) {
        if (!q_edges.empty()) {
            Edge e = q_edges.front();
            q_edges.pop_front();
            if (!g.adjacent(e.u, e.v) || !nice8(e.u, e.v)) continue;
            record_removal({ConfigKind::LightEdge, {e.u, e.v}}, e);
            continue;
        }
        if (q_two.empty()) {
            throw QueueExhausted("both queues empty: " + residue_summary(g));
        }
        VertexId s = q_two.front();
        q_two.pop_front();
        if (!in_q_two(s)) continue;
        VertexId v = g.neighbors(s)[0], w = g.neighbors(s)[1];

        // A remembered 2-vertex forming the same triangle: both share the
        // adjacent pair v,w, which is the shared-pair-a pattern.
        bool fired = false;
        for (auto [host, far] : {std::pair{v, w}, std::pair{w, v}}) {
            if (auto t = triangle_at(host)) {
                auto [two, other] = *t;
                if (other == far && two != s) {
                    VertexId hu = std::min(v, w), hv = std::max(v, w);
                    record_removal({ConfigKind::ConfigA, {hu, hv, two, s}},
                                   Edge(hu, s));
                    fired = true;
                    break;
                }
            }
        }
        if (fired) continue;

        if (!g.adjacent(v, w)) {
            // contract the 2-vertex: replace v-s-w by v-w
            Configuration cfg{ConfigKind::TwoVertexNonadjacent,
                              {s, std::min(v, w), std::max(v, w)}};
            g.remove_edge(s, v);
            g.remove_edge(s, w);
            g.add_edge(v, w);
            refresh(s);
            refresh(v);
            refresh(w);
            trace.push_back(
                ReductionStep{cfg, {Edge(s, v), Edge(s, w)}, {Edge(v, w)}});
            update_after_removal(s, v);
            update_after_removal(s, w);
            continue;
        }

        // s and its neighbors form a triangle.  A remembered triangle at v
        // or w with a different third corner gives the shared-pair-b
        // pattern; otherwise remember this one.
        for (auto [host, far] : {std::pair{v, w}, std::pair{w, v}}) {
            if (auto t = triangle_at(host)) {
                auto [two, other] = *t;
                if (other != far) {
                    record_removal(
                        {ConfigKind::ConfigB, {host, far, other, s, two}},
                        Edge(host, two));
                    triangles.erase(host);
                    fired = true;
                    break;
                }
            }
        }
        if (fired) continue;
        triangles[v] = {s, w};
        triangles[w] = {s, v};
    }

    LinearColoring col = replay(g, original, trace, k);
    return {std::move(col), std::move(trace)};
}

// Breadth-first vertex order over all components; deterministic for a given
// graph.
static std::vector<VertexId> bfs_order(const Graph& g) {
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<VertexId> q;
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        q.push_back(r);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            order.push_back(v);
            for (VertexId t : g.neighbors(v)) {
                if (!seen[t]) {
                    seen[t] = 1;
                    q.push_back(t);
                }
            }
        }
    }
    return order;
}

// Number of meaningful leading entries in Configuration::at for each kind.
static std::size_t config_arity(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::LightEdge: return 2;
        case ConfigKind::TwoVertexNonadjacent: return 3;
        case ConfigKind::ConfigA: return 4;
        case ConfigKind::ConfigB: return 5;
        case ConfigKind::TwoPairs: return 4;
        case ConfigKind::ChordedC4: return 4;
        case ConfigKind::TwoWithThree: return 6;
        case ConfigKind::CubicSmall: return 5;
        case ConfigKind::TwoCubic: return 6;
    }
    return 6;
}

LinearColoring solve_highdegree(Graph& g, Color k, ReductionTrace* trace_out) {
    std::size_t delta = g.max_degree();
    if (delta < 11) {
        throw InvalidParams("high-degree engine requires max degree >= 11");
    }
    if (k < choose_k(delta)) {
        throw InvalidParams("k=" + std::to_string(k) + " is below the target " +
                            std::to_string(choose_k(delta)));
    }

    // The caller's vertex numbering is arbitrary, which scatters every
    // per-vertex table access on large instances.  Run the engine on a
    // breadth-first relabeling instead: each neighborhood's ids, and so its
    // table entries, end up clustered, and the caller's graph is never
    // touched.  The coloring and trace are mapped back afterwards.
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> order = bfs_order(g);
    std::vector<VertexId> fwd(n);
    for (std::size_t nv = 0; nv < n; ++nv) fwd[order[nv]] = VertexId(nv);

    Graph h(n);
    {
        Graph::Snapshot s;
        s.offsets.resize(n + 1);
        s.offsets[0] = 0;
        for (std::size_t nv = 0; nv < n; ++nv) {
            s.offsets[nv + 1] = s.offsets[nv] + g.degree(order[nv]);
        }
        s.neighbors.resize(2 * g.edge_count());
        for (std::size_t nv = 0; nv < n; ++nv) {
            std::size_t at = s.offsets[nv];
            for (VertexId t : g.neighbors(order[nv])) {
                s.neighbors[at++] = fwd[t];
            }
            std::sort(s.neighbors.begin() + s.offsets[nv],
                      s.neighbors.begin() + at);
        }
        h.restore(s);
    }

    HighResult res = run_highdegree(h, k);

    // Rebuild the coloring on the caller's ids; sorted assignment order
    // keeps the per-vertex writes clustered.
    LinearColoring col(n, k);
    for (std::size_t v = 0; v < n; ++v) {
        col.reserve_incident(VertexId(v), g.degree(VertexId(v)));
    }
    auto asg = res.col.assignment();
    for (auto& [e, c] : asg) e = Edge(order[e.u], order[e.v]);
    std::sort(asg.begin(), asg.end());
    for (const auto& [e, c] : asg) col.assign(e.u, e.v, c);

    if (trace_out) {
        for (ReductionStep& st : res.trace) {
            std::size_t arity = config_arity(st.config.kind);
            for (std::size_t i = 0; i < arity; ++i) {
                st.config.at[i] = order[st.config.at[i]];
            }
            for (Edge& e : st.removed) e = Edge(order[e.u], order[e.v]);
            for (Edge& e : st.added) e = Edge(order[e.u], order[e.v]);
        }
        *trace_out = std::move(res.trace);
    }
    return col;
}

bool is_nice(const Graph& g, VertexId u, VertexId v, Color k) {
    std::size_t du = g.degree(u), dv = g.degree(v);
    if (du + dv <= 13) return true;
    if (du == 1 || dv == 1) return true;
    std::size_t limit = 2 * std::size_t(k) - 1;
    if (du == 2 && dv <= limit) return true;
    if (dv == 2 && du <= limit) return true;
    return false;
}

LinearColoring solve(Graph& g, Color k, Engine engine, ReductionTrace* trace_out) {
    std::size_t delta = g.max_degree();
    Color target = choose_k(delta);
    if (k == 0) {
        k = target;
    } else if (k < target) {
        throw InvalidParams("k=" + std::to_string(k) +
                            " is below the attainable bound " +
                            std::to_string(target));
    }
    if (engine == Engine::Auto) {
        engine = delta >= 11 ? Engine::High : Engine::Bounded;
    }
    return engine == Engine::High ? solve_highdegree(g, k, trace_out)
                                  : solve_bounded(g, k, trace_out);
}

}  // namespace linarb
