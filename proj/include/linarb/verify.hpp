#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linarb/coloring.hpp"
#include "linarb/graph.hpp"

namespace linarb {

struct VerificationReport {
    bool valid = false;
    std::string message;  // first violation; empty when valid
    std::size_t colors_used = 0;
    std::vector<std::size_t> class_sizes;  // edges per color, index c-1
    std::vector<std::size_t> path_counts;  // paths per color, index c-1
};

// Checks that the assignment colors exactly the edges of g and that every
// color class is a linear forest (per-vertex color degree <= 2, no cycles).
// Works from the raw edge->color list only, sharing no machinery with the
// solver's incremental structures.
VerificationReport verify(const Graph& g, Color k,
                          const std::vector<std::pair<Edge, Color>>& assignment);

VerificationReport verify(const Graph& g, const LinearColoring& col);

// Exact linear arboricity by backtracking over edge colorings, with the
// color classes canonicalized by first use to kill symmetry.  Rejects
// inputs with more than 18 edges (TooLarge).
Color brute_force_la(const Graph& g);

// Random planar graph: grows a combinatorial triangulation on n >= 3
// vertices by repeated face splits, then deletes random incident edges at
// each vertex whose degree exceeds target_delta.  Deterministic in seed;
// the result has at most 3n-6 edges and max degree <= target_delta.
Graph gen_planar(std::size_t n, std::size_t target_delta, std::uint64_t seed);

}  // namespace linarb
