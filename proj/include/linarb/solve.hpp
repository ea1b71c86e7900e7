#pragma once

#include "linarb/reduce.hpp"

namespace linarb {

enum class Engine { Auto, Bounded, High };

// Reduction engine for graphs with max degree <= 10.  Repeatedly finds and
// applies reducible configurations (tracked with a dirty-vertex worklist),
// then replays the trace backwards, extending the coloring over each step.
// The graph is restored to its original edge set before returning.
LinearColoring solve_bounded(Graph& g, Color k, ReductionTrace* trace_out = nullptr);

// Queue-driven engine for graphs with max degree >= 11 (k >= 6).  Maintains
// a queue of "nice" (removable light) edges and a queue of 2-vertices whose
// neighbors both have degree 2k; every dequeue either removes an edge or
// records a triangle, giving O(n log n) total work on planar inputs.
LinearColoring solve_highdegree(Graph& g, Color k, ReductionTrace* trace_out = nullptr);

// An edge is nice when its endpoint degree sum is at most 13, or it is
// incident to a 1-vertex, or it is incident to a 2-vertex whose other
// endpoint has degree at most 2k-1.  Nice edges are always light.
bool is_nice(const Graph& g, VertexId u, VertexId v, Color k);

// Dispatcher: picks the engine from the max degree (>= 11 -> high) and the
// color count from choose_k unless overridden.  k, when given, must be at
// least choose_k(max_degree).
LinearColoring solve(Graph& g, Color k = 0, Engine engine = Engine::Auto,
                     ReductionTrace* trace_out = nullptr);

}  // namespace linarb
