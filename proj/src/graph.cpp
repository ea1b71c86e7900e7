#include "linarb/graph.hpp"

#include <algorithm>

namespace linarb {

void Graph::fail_vertex(VertexId v) const {
    throw InvalidParams("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw SelfLoop("self-loop at vertex " + std::to_string(u));
    }
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) {
        throw DuplicateEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " already present");
    }
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) {
        throw MissingEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " not present");
    }
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --deg_[u];
    --deg_[v];
    --m_;
}

Graph::Snapshot Graph::snapshot() const {
    Snapshot s;
    s.offsets.resize(adj_.size() + 1);
    s.offsets[0] = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        s.offsets[v + 1] = s.offsets[v] + deg_[v];
    }
    s.neighbors.resize(2 * m_);
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        std::copy(adj_[v].begin(), adj_[v].end(),
                  s.neighbors.begin() + s.offsets[v]);
    }
    return s;
}

void Graph::restore(const Snapshot& s) {
    if (s.offsets.size() != adj_.size() + 1) {
        throw InvalidParams("snapshot is for a different vertex set");
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        auto first = s.neighbors.begin() + s.offsets[v];
        auto last = s.neighbors.begin() + s.offsets[v + 1];
        adj_[v].assign(first, last);
        deg_[v] = static_cast<std::uint32_t>(last - first);
    }
    m_ = s.neighbors.size() / 2;
}

std::size_t Graph::edge_weight(VertexId u, VertexId v) const {
    if (!adjacent(u, v)) {
        throw MissingEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " not present");
    }
    return degree(u) + degree(v);
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (std::uint32_t x : deg_) d = std::max<std::size_t>(d, x);
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace linarb
