#include "linarb/coloring.hpp"

#include <algorithm>

namespace linarb {

LinearColoring::LinearColoring(std::size_t n, Color k)
    : n_(n), k_(k), incident_(n), profile_(n * k, 0), forests_(k),
      class_sizes_(k, 0) {
    if (k == 0) throw InvalidParams("coloring needs at least one color");
    for (auto& f : forests_) f.reserve(n);
}

void LinearColoring::fail_check(VertexId v, Color c) const {
    if (v >= n_) {
        throw InvalidParams("vertex id " + std::to_string(v) + " out of range");
    }
    throw InvalidParams("color " + std::to_string(c) + " out of range");
}

int LinearColoring::count(VertexId v, Color c) const {
    check(v, c);
    return profile_[v * k_ + (c - 1)];
}

void LinearColoring::bump(VertexId v, Color c, int delta) {
    profile_[v * k_ + (c - 1)] =
        static_cast<std::uint8_t>(profile_[v * k_ + (c - 1)] + delta);
}

Color LinearColoring::color_of(VertexId u, VertexId v) const {
    check(u, 1);
    check(v, 1);
    for (const auto& [w, c] : incident_[u])
        if (w == v) return c;
    throw NotColored("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " has no color");
}

bool LinearColoring::is_colored(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) return false;
    for (const auto& [w, c] : incident_[u])
        if (w == v) return true;
    return false;
}

std::vector<Color> LinearColoring::free_colors(VertexId v) const {
    check(v, 1);
    std::vector<Color> out;
    const std::uint8_t* row = profile_.data() + v * k_;
    for (Color c = 1; c <= k_; ++c) {
        if (row[c - 1] <= 1) out.push_back(c);
    }
    return out;
}

Color LinearColoring::smallest_free(VertexId v) const {
    check(v, 1);
    const std::uint8_t* row = profile_.data() + v * k_;
    for (Color c = 1; c <= k_; ++c) {
        if (row[c - 1] <= 1) return c;
    }
    throw Error("no free color at vertex " + std::to_string(v));
}

bool LinearColoring::same_path(Color c, VertexId u, VertexId v) {
    check(u, c);
    check(v, c);
    return forests_[c - 1].same_path(u, v);
}

void LinearColoring::assign(VertexId u, VertexId v, Color c) {
    check(u, c);
    check(v, c);
    if (u == v) throw SelfLoop("cannot color a self-loop");
    if (is_colored(u, v)) {
        throw DuplicateEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " already colored");
    }
    if (count(u, c) >= 2 || count(v, c) >= 2) {
        throw WouldExceedDegree("color " + std::to_string(c) +
                                " already has two edges at an endpoint of " +
                                std::to_string(u) + "-" + std::to_string(v));
    }
    // link throws WouldCloseCycle itself when u and v already share a path,
    // before any structural change, so no separate same_path probe is needed
    forests_[c - 1].link(u, v);
    incident_[u].emplace_back(v, c);
    incident_[v].emplace_back(u, c);
    ++colored_count_;
    bump(u, c, 1);
    bump(v, c, 1);
    ++class_sizes_[c - 1];
}

Color LinearColoring::unassign(VertexId u, VertexId v) {
    Color c = color_of(u, v);  // throws NotColored when absent
    forests_[c - 1].cut(u, v);
    auto drop = [](std::vector<std::pair<VertexId, Color>>& list, VertexId w) {
        for (auto& entry : list) {
            if (entry.first == w) {
                entry = list.back();
                list.pop_back();
                return;
            }
        }
    };
    drop(incident_[u], v);
    drop(incident_[v], u);
    --colored_count_;
    bump(u, c, -1);
    bump(v, c, -1);
    --class_sizes_[c - 1];
    return c;
}

void LinearColoring::recolor(VertexId u, VertexId v, Color c) {
    Color old = unassign(u, v);
    try {
        assign(u, v, c);
    } catch (...) {
        assign(u, v, old);
        throw;
    }
}

std::vector<std::pair<Edge, Color>> LinearColoring::assignment() const {
    std::vector<std::pair<Edge, Color>> out;
    out.reserve(colored_count_);
    for (VertexId v = 0; v < n_; ++v)
        for (const auto& [w, c] : incident_[v])
            if (v < w) out.emplace_back(Edge(v, w), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t LinearColoring::colors_used() const {
    std::size_t used = 0;
    for (std::size_t s : class_sizes_) {
        if (s > 0) ++used;
    }
    return used;
}

}  // namespace linarb
