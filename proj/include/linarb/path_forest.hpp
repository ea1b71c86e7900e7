#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

// Dynamic collection of vertex-disjoint paths over one color class.
//
// Each path is stored as a splay tree over its vertex sequence, with a lazy
// reversal flag so either end can be extended in O(log n) amortized.  Only
// vertices that currently lie on some path have a node; isolated vertices are
// dropped eagerly so memory stays proportional to the number of colored
// edges.  Nodes are 16-byte records linked by 32-bit indices into a pooled
// array, which keeps the working set small on large instances.
class PathForest {
public:
    PathForest() = default;

    bool contains(VertexId v) const { return lookup(v) != 0; }

    // Switches vertex lookup to a dense array over ids < n; a performance
    // hint for large vertex sets.  Ids >= n still go through the hash map.
    void reserve(std::size_t n) {
        if (n > dense_.size()) dense_.resize(n, 0);
    }

    // True iff u and v currently lie on the same path.  Rebalances
    // internally, hence non-const.  Vertices without a node are singleton
    // paths.
    bool same_path(VertexId u, VertexId v);

    // Join the paths of u and v with a new edge u-v.  Both u and v must be
    // path ends (or absent).  The caller enforces the degree bound; this
    // structure only assumes it.
    void link(VertexId u, VertexId v);

    // Remove the edge u-v, which must be a path edge (u and v adjacent on a
    // common path).  Nodes that become isolated are erased.
    void cut(VertexId u, VertexId v);

    std::size_t node_count() const { return node_count_; }

private:
    using Idx = std::uint32_t;  // pool index; 0 is the null sentinel

    struct Node {
        Idx left = 0;
        Idx right = 0;
        // Parent index in the low 31 bits, lazy reversal flag in the top
        // bit; pool indices stay well below 2^31.
        Idx parent_rev = 0;
        VertexId vertex = 0;
    };
    static constexpr Idx kRev = Idx(1) << 31;

    Node& at(Idx i) { return pool_[i]; }
    const Node& at(Idx i) const { return pool_[i]; }

    Idx parent(Idx i) const { return at(i).parent_rev & ~kRev; }
    void set_parent(Idx i, Idx p) {
        at(i).parent_rev = (at(i).parent_rev & kRev) | p;
    }
    bool reversed(Idx i) const { return (at(i).parent_rev & kRev) != 0; }
    void flip(Idx i) { at(i).parent_rev ^= kRev; }

    Idx lookup(VertexId v) const;
    Idx get_or_create(VertexId v);
    void erase_if_isolated(VertexId v);

    void push_down(Idx x);
    void rotate(Idx x);
    void splay(Idx x, Idx stop = 0);
    // Pushes pending reversal flags down along the root-to-x path.
    void push_path(Idx x);
    // Makes x an end of its sequence: after the call x is the tree root and
    // has no right child (tail) or no left child (head).
    void make_tail(Idx x);
    void make_head(Idx x);

    // Lookup is by dense array for ids below the reserve threshold, hash map
    // above it.  Erased nodes go on a free list for reuse.
    std::vector<Idx> dense_;
    std::unordered_map<VertexId, Idx> nodes_;
    std::vector<Node> pool_ = std::vector<Node>(1);  // slot 0 = null
    std::vector<Idx> free_;
    std::vector<Idx> chain_;  // scratch for push_path, kept to avoid churn
    std::size_t node_count_ = 0;
};

}  // namespace linarb
