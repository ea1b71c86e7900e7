#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "linarb/coloring.hpp"
#include "linarb/graph.hpp"

namespace linarb {

// Local patterns that admit a reduction: delete (and possibly add) a few
// edges, solve the smaller instance, then extend the coloring back over the
// original edges.  Listed in detection priority order.
enum class ConfigKind {
    LightEdge,             // edge with endpoint degree sum <= 2k+1
    TwoVertexNonadjacent,  // 2-vertex whose neighbors are non-adjacent
    ConfigA,               // two 2-vertices sharing two adjacent neighbors
    ConfigB,               // two 2-vertices sharing one neighbor, triangles
    TwoPairs,              // 3-vertex whose neighborhood induces two edges
    ChordedC4,             // 4-cycle with a chord, one 2-vertex, one 3-vertex
    TwoWithThree,          // triangle with a 2-vertex hanging off a K4
    CubicSmall,            // small-degree vertex with two 3-neighbors
    TwoCubic,              // two 3-vertices in a dense 6-vertex pattern
};

const char* config_kind_name(ConfigKind kind);

// A matched configuration.  The meaning of the vertex slots depends on the
// kind:
//   LightEdge            {u, v}
//   TwoVertexNonadjacent {v, u, z}           deg(v)=2, u/z its neighbors
//   ConfigA              {u, v, w, z}        w,z the 2-vertices
//   ConfigB              {u, v, t, w, z}     w,z the 2-vertices, u shared
//   TwoPairs             {v, u, w, z}        deg(v)=3, z adjacent to u and w
//   ChordedC4            {v, z, u, w}        deg(u)=2, deg(v)=3, chord z-w
//   TwoWithThree         {u, v, w, z, x, y}  deg(u)=2, deg(z)=3
//   CubicSmall           {v, x, x1, x2, y}   deg(x)=deg(y)=3
//   TwoCubic             {u, v, w, z, x, y}  deg(v)=deg(x)=3
struct Configuration {
    ConfigKind kind;
    std::array<VertexId, 6> at{};
};

// Fixed-capacity edge list.  Reductions remove at most three edges and add
// at most one, so steps can stay flat in memory with no per-step allocation;
// traces run to millions of steps on large inputs.
template <std::size_t N>
class EdgeList {
public:
    EdgeList() = default;
    EdgeList(std::initializer_list<Edge> es) {
        for (const Edge& e : es) push_back(e);
    }
    void push_back(const Edge& e) { data_[size_++] = e; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Edge* begin() { return data_.data(); }
    Edge* end() { return data_.data() + size_; }
    const Edge* begin() const { return data_.data(); }
    const Edge* end() const { return data_.data() + size_; }
    const Edge& operator[](std::size_t i) const { return data_[i]; }

private:
    std::array<Edge, N> data_{};
    std::uint8_t size_ = 0;
};

// One reduction: the matched configuration plus the exact edge surgery that
// was applied, so the step can be undone and the coloring extended later.
struct ReductionStep {
    Configuration config;
    EdgeList<3> removed;
    EdgeList<1> added;
};

using ReductionTrace = std::vector<ReductionStep>;

// Number of colors the solver targets for a graph of the given maximum
// degree: max(ceil(max_degree / 2), 5).
Color choose_k(std::size_t max_degree);

// Finds a configuration whose vertices lie within distance 2 of v, if any.
// Kinds are tried in declaration order; candidate roots in ascending vertex
// order, so the result is deterministic.  Requires max_degree(g) <= 2k.
std::optional<Configuration> detect_at(const Graph& g, VertexId v, Color k);

// Re-validates the configuration against the current graph (throwing
// StaleConfiguration on mismatch), applies its edge surgery, and returns the
// recorded step.
ReductionStep apply_reduction(Graph& g, const Configuration& cfg, Color k);

// Extends a coloring of the reduced graph over the edges the step removed.
// col must color exactly the post-surgery edge set; the routines read the
// local structure from the coloring itself, so they never touch the graph.
// Dispatches on the config kind.
void extend(LinearColoring& col, const ReductionStep& step);

// Per-kind extension procedures, exposed for targeted tests.
void extend_light_edge(LinearColoring& col, const Configuration& cfg);
void extend_two_vertex(LinearColoring& col, const Configuration& cfg);
void extend_config_a(LinearColoring& col, const Configuration& cfg);
void extend_config_b(LinearColoring& col, const Configuration& cfg);
void extend_two_pairs(LinearColoring& col, const Configuration& cfg);
void extend_chorded_c4(LinearColoring& col, const Configuration& cfg);
void extend_two_with_three(LinearColoring& col, const Configuration& cfg);
void extend_cubic_small(LinearColoring& col, const Configuration& cfg);
void extend_two_cubic(LinearColoring& col, const Configuration& cfg);

}  // namespace linarb
