#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "linarb/io.hpp"

namespace linarb {

namespace {

// Next content line, with comments and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::uint64_t parse_number(std::istringstream& is, const char* what) {
    std::uint64_t value;
    if (!(is >> value)) {
        throw ParseError(std::string("expected ") + what);
    }
    return value;
}

void expect_end(std::istringstream& is) {
    std::string rest;
    if (is >> rest) throw ParseError("trailing content: '" + rest + "'");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing 'p <n> <m>' header");
    std::istringstream hdr(line);
    std::string tag;
    hdr >> tag;
    if (tag != "p") throw ParseError("expected 'p' header, got '" + tag + "'");
    std::uint64_t n = parse_number(hdr, "vertex count");
    std::uint64_t m = parse_number(hdr, "edge count");
    expect_end(hdr);
    if (n > (1ull << 31)) throw ParseError("vertex count too large");

    Graph g(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!next_line(in, line)) {
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        std::istringstream es(line);
        std::uint64_t u = parse_number(es, "edge endpoint");
        std::uint64_t v = parse_number(es, "edge endpoint");
        expect_end(es);
        if (u >= n || v >= n) {
            throw ParseError("edge endpoint out of range: " + line);
        }
        try {
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } catch (const SelfLoop&) {
            throw NonSimpleInput("self-loop: " + line);
        } catch (const DuplicateEdge&) {
            throw NonSimpleInput("repeated edge: " + line);
        }
    }
    if (next_line(in, line)) throw ParseError("content after last edge: " + line);
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v << "\n";
    }
}

ColoringData read_coloring(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing 'c <k>' header");
    std::istringstream hdr(line);
    std::string tag;
    hdr >> tag;
    if (tag != "c") throw ParseError("expected 'c' header, got '" + tag + "'");
    std::uint64_t k = parse_number(hdr, "color count");
    expect_end(hdr);
    if (k == 0 || k > (1u << 30)) throw ParseError("bad color count");

    ColoringData data;
    data.k = static_cast<Color>(k);
    while (next_line(in, line)) {
        std::istringstream es(line);
        std::uint64_t u = parse_number(es, "edge endpoint");
        std::uint64_t v = parse_number(es, "edge endpoint");
        std::uint64_t c = parse_number(es, "color");
        expect_end(es);
        if (u == v) throw NonSimpleInput("self-loop: " + line);
        if (u > (1ull << 31) || v > (1ull << 31)) {
            throw ParseError("vertex id too large: " + line);
        }
        if (c < 1 || c > k) throw ParseError("color out of range: " + line);
        data.edges.emplace_back(
            Edge(static_cast<VertexId>(u), static_cast<VertexId>(v)),
            static_cast<Color>(c));
    }
    return data;
}

void write_coloring(std::ostream& out, const Graph& g, const LinearColoring& col) {
    out << "c " << col.num_colors() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v << " " << col.color_of(e.u, e.v) << "\n";
    }
}

}  // namespace linarb
