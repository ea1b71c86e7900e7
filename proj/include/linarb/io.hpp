#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "linarb/coloring.hpp"
#include "linarb/graph.hpp"

namespace linarb {

// Edge list format:
//   p <n> <m>
//   <u> <v>          (m lines, 0-based vertex ids)
// Lines starting with '#' are comments.  Self-loops and repeated edges are
// rejected (NonSimpleInput); any other malformed content is a ParseError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Coloring format:
//   c <k>
//   <u> <v> <color>  (one line per edge, colors in 1..k)
struct ColoringData {
    Color k = 0;
    std::vector<std::pair<Edge, Color>> edges;
};
ColoringData read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Graph& g, const LinearColoring& col);

}  // namespace linarb
