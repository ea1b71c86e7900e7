#include "linarb/path_forest.hpp"

#include <utility>
#include <vector>

namespace linarb {

PathForest::Idx PathForest::lookup(VertexId v) const {
    if (v < dense_.size()) return dense_[v];
    auto it = nodes_.find(v);
    return it == nodes_.end() ? 0 : it->second;
}

PathForest::Idx PathForest::get_or_create(VertexId v) {
    Idx existing = lookup(v);
    if (existing) return existing;
    Idx i;
    if (free_.empty()) {
        i = Idx(pool_.size());
        pool_.emplace_back();
    } else {
        i = free_.back();
        free_.pop_back();
        pool_[i] = Node{};
    }
    pool_[i].vertex = v;
    if (v < dense_.size()) {
        dense_[v] = i;
    } else {
        nodes_[v] = i;
    }
    ++node_count_;
    return i;
}

void PathForest::erase_if_isolated(VertexId v) {
    Idx i = lookup(v);
    if (i && !at(i).left && !at(i).right && parent(i) == 0) {
        if (v < dense_.size()) {
            dense_[v] = 0;
        } else {
            nodes_.erase(v);
        }
        free_.push_back(i);
        --node_count_;
    }
}

void PathForest::push_down(Idx x) {
    if (reversed(x)) {
        Node& n = at(x);
        std::swap(n.left, n.right);
        if (n.left) flip(n.left);
        if (n.right) flip(n.right);
        flip(x);
    }
}

void PathForest::push_path(Idx x) {
    chain_.clear();
    for (Idx p = x; p; p = parent(p)) chain_.push_back(p);
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) push_down(*it);
}

void PathForest::rotate(Idx x) {
    Idx p = parent(x);
    Idx g = parent(p);
    if (at(p).left == x) {
        at(p).left = at(x).right;
        if (at(x).right) set_parent(at(x).right, p);
        at(x).right = p;
    } else {
        at(p).right = at(x).left;
        if (at(x).left) set_parent(at(x).left, p);
        at(x).left = p;
    }
    set_parent(p, x);
    set_parent(x, g);
    if (g) {
        if (at(g).left == p) {
            at(g).left = x;
        } else if (at(g).right == p) {
            at(g).right = x;
        }
    }
}

void PathForest::splay(Idx x, Idx stop) {
    push_path(x);
    while (parent(x) != stop) {
        Idx p = parent(x);
        Idx g = parent(p);
        if (g != stop) {
            if ((at(g).left == p) == (at(p).left == x)) {
                rotate(p);
            } else {
                rotate(x);
            }
        }
        rotate(x);
    }
}

void PathForest::make_tail(Idx x) {
    splay(x);
    push_down(x);
    if (at(x).right == 0) return;
    if (at(x).left == 0) {
        flip(x);
        push_down(x);
        return;
    }
    throw Error("path forest: vertex is not a path end");
}

void PathForest::make_head(Idx x) {
    splay(x);
    push_down(x);
    if (at(x).left == 0) return;
    if (at(x).right == 0) {
        flip(x);
        push_down(x);
        return;
    }
    throw Error("path forest: vertex is not a path end");
}

bool PathForest::same_path(VertexId u, VertexId v) {
    if (u == v) return true;
    Idx nu = lookup(u);
    Idx nv = lookup(v);
    if (!nu || !nv) return false;
    splay(nu);
    splay(nv);
    // If u and v share a tree, the second splay left nu below nv.
    return parent(nu) != 0;
}

void PathForest::link(VertexId u, VertexId v) {
    if (u == v) throw WouldCloseCycle("path forest: loop edge");
    Idx nu = get_or_create(u);
    Idx nv = get_or_create(v);
    make_tail(nu);
    make_head(nv);
    if (nu == nv || parent(nu) != 0) {
        throw WouldCloseCycle("path forest: endpoints already connected");
    }
    at(nu).right = nv;
    set_parent(nv, nu);
}

void PathForest::cut(VertexId u, VertexId v) {
    if (u == v) throw Error("path forest: cut on loop edge");
    Idx nu = lookup(u);
    Idx nv = lookup(v);
    if (!nu || !nv) throw Error("path forest: cut on absent vertex");
    splay(nu);
    Idx root = nv;
    while (parent(root)) root = parent(root);
    if (root != nu) throw Error("path forest: cut across distinct paths");
    splay(nv, nu);
    if (at(nu).left == nv) {
        push_down(nv);
        if (at(nv).right != 0) {
            throw Error("path forest: cut on non-adjacent vertices");
        }
        at(nu).left = 0;
    } else if (at(nu).right == nv) {
        push_down(nv);
        if (at(nv).left != 0) {
            throw Error("path forest: cut on non-adjacent vertices");
        }
        at(nu).right = 0;
    } else {
        throw Error("path forest: cut on non-adjacent vertices");
    }
    set_parent(nv, 0);
    erase_if_isolated(u);
    erase_if_isolated(v);
}

}  // namespace linarb
