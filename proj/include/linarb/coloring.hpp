#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linarb/graph.hpp"
#include "linarb/path_forest.hpp"

namespace linarb {

using Color = std::uint32_t;  // colors are 1..k

// Partial edge coloring in which every color class is a linear forest.
//
// Invariants maintained on every mutation:
//   * each vertex has at most two incident edges of any one color,
//   * no color class contains a cycle.
// Violating assignments throw (WouldExceedDegree / WouldCloseCycle) and leave
// the coloring unchanged.  The structure is independent of any Graph: edges
// are identified by their endpoints alone, so reductions can rewrite the
// graph without invalidating the coloring.
class LinearColoring {
public:
    LinearColoring(std::size_t n, Color k);

    Color num_colors() const { return k_; }
    std::size_t vertex_count() const { return n_; }
    std::size_t colored_edge_count() const { return colored_count_; }

    // Number of incident edges of color c at v (0, 1 or 2).
    int count(VertexId v, Color c) const;

    // Color of edge u-v; throws NotColored if unassigned.
    Color color_of(VertexId u, VertexId v) const;
    bool is_colored(VertexId u, VertexId v) const;

    // Colors c with count(v, c) <= 1, ascending.  "Free" in the sense that v
    // can take one more edge of that color.
    std::vector<Color> free_colors(VertexId v) const;
    // Smallest free color at v; throws Error if none (cannot happen while
    // degree(v) < 2k).
    Color smallest_free(VertexId v) const;

    // True iff u and v are connected by edges of color c.
    bool same_path(Color c, VertexId u, VertexId v);

    // Capacity hint for v's incident list (e.g. its final graph degree);
    // avoids repeated growth while millions of edges get colored.
    void reserve_incident(VertexId v, std::size_t cap) {
        incident_[v].reserve(cap);
    }

    void assign(VertexId u, VertexId v, Color c);
    // Removes the color of u-v and returns it.
    Color unassign(VertexId u, VertexId v);
    // unassign + assign, with the guarantee that the coloring is untouched if
    // the new assignment is rejected.
    void recolor(VertexId u, VertexId v, Color c);

    // Distinct colors with at least one edge.
    std::size_t colors_used() const;

    // Snapshot of the full assignment, sorted by Edge ordering.
    std::vector<std::pair<Edge, Color>> assignment() const;

private:
    void check(VertexId v, Color c) const {
        if (v >= n_ || c < 1 || c > k_) fail_check(v, c);
    }
    [[noreturn]] void fail_check(VertexId v, Color c) const;
    void bump(VertexId v, Color c, int delta);

    std::size_t n_;
    Color k_;
    // Per-vertex incident colored edges as (other endpoint, color) pairs.
    // A vertex carries at most two edges per color, so each list holds at
    // most 2k entries and linear scans beat hashing on locality.
    std::vector<std::vector<std::pair<VertexId, Color>>> incident_;
    std::size_t colored_count_ = 0;
    // Flat n*k table of per-vertex color counts (each 0, 1 or 2); row v
    // starts at v*k.  Contiguous so the hot count/free-color scans stay in
    // one cache line per vertex.
    std::vector<std::uint8_t> profile_;
    std::vector<PathForest> forests_;  // index c-1
    std::vector<std::size_t> class_sizes_;
};

}  // namespace linarb
