#pragma once

#include <cstdint>
#include <vector>

#include "linarb/errors.hpp"

namespace linarb {

using VertexId = std::uint32_t;

// An undirected edge with normalized endpoints (u < v).
struct Edge {
    VertexId u;
    VertexId v;

    Edge() : u(0), v(0) {}
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        // self-loops are rejected at the Graph level; keep normalization total
    }

    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.key() < b.key();
    }
};

// Simple undirected graph on a fixed vertex set {0, ..., n-1}.
// Neighbor lists are kept sorted so adjacency queries are binary searches.
// Vertices are never removed; "removing" a vertex means removing all of its
// incident edges, so vertex ids stay stable across reductions.
class Graph {
public:
    explicit Graph(std::size_t n) : adj_(n), deg_(n, 0), m_(0) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }

    // Degrees are mirrored in a flat array: degree probes dominate the
    // reduction loop and hit far fewer cache lines this way than reading
    // each neighbor list's header.
    std::size_t degree(VertexId v) const { return deg_[v]; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

    bool adjacent(VertexId u, VertexId v) const;

    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);

    // Flat copy of all neighbor lists: offsets[v] .. offsets[v+1] indexes
    // into neighbors.  Saving and re-applying one of these is two sequential
    // passes, far cheaper than re-adding millions of edges one by one.
    struct Snapshot {
        std::vector<std::size_t> offsets;  // size n + 1
        std::vector<VertexId> neighbors;   // size 2m
        std::size_t degree(VertexId v) const {
            return offsets[v + 1] - offsets[v];
        }
    };
    Snapshot snapshot() const;
    // Restores the edge set captured by snapshot() on this same graph.
    void restore(const Snapshot& s);

    // Sum of the endpoint degrees of an existing edge.
    std::size_t edge_weight(VertexId u, VertexId v) const;

    std::size_t max_degree() const;

    // All edges, normalized and sorted by (u, v).
    std::vector<Edge> edges() const;

private:
    void check_vertex(VertexId v) const {
        if (v >= adj_.size()) fail_vertex(v);
    }
    [[noreturn]] void fail_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::uint32_t> deg_;
    std::size_t m_;
};

}  // namespace linarb
