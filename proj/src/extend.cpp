#include <utility>

#include "linarb/reduce.hpp"

namespace linarb {

namespace {

// Smallest color with no edge at v, or 0 if every color is present.
Color smallest_absent(const LinearColoring& col, VertexId v) {
    for (Color c = 1; c <= col.num_colors(); ++c) {
        if (col.count(v, c) == 0) return c;
    }
    return 0;
}

}  // namespace

void extend_light_edge(LinearColoring& col, const Configuration& cfg) {
    VertexId u = cfg.at[0], v = cfg.at[1];
    for (Color c = 1; c <= col.num_colors(); ++c) {
        int cu = col.count(u, c), cv = col.count(v, c);
        if ((cu == 0 && cv <= 1) || (cv == 0 && cu <= 1)) {
            col.assign(u, v, c);
            return;
        }
    }
    throw ExtensionFailed("no color fits the light edge " + std::to_string(u) +
                          "-" + std::to_string(v));
}

void extend_two_vertex(LinearColoring& col, const Configuration& cfg) {
    VertexId v = cfg.at[0], u = cfg.at[1], z = cfg.at[2];
    Color a = col.unassign(u, z);
    col.assign(u, v, a);
    col.assign(v, z, a);
}

void extend_config_a(LinearColoring& col, const Configuration& cfg) {
    VertexId u = cfg.at[0], v = cfg.at[1], w = cfg.at[2], z = cfg.at[3];
    Color a = col.smallest_free(u);
    if (col.color_of(v, z) != a || !col.same_path(a, u, v)) {
        col.assign(u, z, a);
        return;
    }
    Color cvw = col.color_of(v, w);
    if (cvw == a) {
        // the blocking path runs z-v-w-u; rotate the triangle's colors
        if (col.color_of(w, u) != a) {
            throw ExtensionFailed("inconsistent path through shared pair");
        }
        Color b = col.color_of(u, v);
        col.unassign(v, w);
        col.unassign(w, u);
        col.unassign(u, v);
        col.assign(u, v, a);
        col.assign(u, w, a);
        col.assign(v, w, b);
        col.assign(u, z, b);
    } else {
        Color c = col.color_of(w, u);
        if (c == a) {
            throw ExtensionFailed("inconsistent path through shared pair");
        }
        col.unassign(w, u);
        col.assign(u, w, a);
        col.assign(u, z, c);
    }
}

void extend_config_b(LinearColoring& col, const Configuration& cfg) {
    VertexId u = cfg.at[0], v = cfg.at[1], t = cfg.at[2], w = cfg.at[3],
             z = cfg.at[4];
    Color a = col.smallest_free(u);
    if (col.color_of(t, z) != a || !col.same_path(a, t, u)) {
        col.assign(u, z, a);
        return;
    }
    Color cuw = col.color_of(u, w);
    if (cuw == a) {
        if (col.color_of(w, v) != a) {
            throw ExtensionFailed("inconsistent path through shared pair");
        }
        Color b = col.color_of(u, v);
        col.unassign(v, w);
        col.unassign(u, v);
        col.assign(u, v, a);
        col.assign(v, w, b);
        col.assign(u, z, b);
    } else {
        col.unassign(u, w);
        col.assign(u, w, a);
        col.assign(u, z, cuw);
    }
}

void extend_two_pairs(LinearColoring& col, const Configuration& cfg) {
    VertexId v = cfg.at[0], u = cfg.at[1], w = cfg.at[2], z = cfg.at[3];
    Color au = col.color_of(u, z);
    Color bw = col.color_of(z, w);
    Color c = col.unassign(u, w);
    Color d = 0;
    for (Color cc : col.free_colors(z)) {
        if (cc != c) {
            d = cc;
            break;
        }
    }
    if (d != 0) {
        col.assign(v, u, c);
        col.assign(v, w, c);
        col.assign(v, z, d);
    } else if (!col.same_path(c, u, z)) {
        col.unassign(u, z);
        col.assign(u, v, au);
        col.assign(v, z, au);
        col.assign(v, w, c);
        col.assign(u, z, c);
    } else if (!col.same_path(c, w, z)) {
        col.unassign(w, z);
        col.assign(w, v, bw);
        col.assign(v, z, bw);
        col.assign(v, u, c);
        col.assign(w, z, c);
    } else {
        throw ExtensionFailed("both rerouting paths blocked at two-pairs");
    }
}

void extend_chorded_c4(LinearColoring& col, const Configuration& cfg) {
    VertexId v = cfg.at[0], z = cfg.at[1], u = cfg.at[2], w = cfg.at[3];
    Color a = col.smallest_free(z);
    if (col.color_of(u, w) != a || !col.same_path(a, w, z)) {
        col.assign(u, z, a);
        return;
    }
    Color cwz = col.color_of(w, z);
    if (cwz == a) {
        Color b = col.color_of(v, z);
        col.unassign(v, z);
        col.assign(v, z, a);
        col.assign(u, z, b);
        return;
    }
    Color b = cwz;
    Color cz = col.color_of(v, z), cw = col.color_of(v, w);
    if (cz != a && cw != a) {
        col.unassign(v, z);
        col.assign(v, z, a);
        col.assign(u, z, cz);
    } else if (cz != a && cw == a) {
        col.unassign(v, w);
        col.unassign(w, z);
        col.assign(w, z, a);
        col.assign(v, w, b);
        col.assign(u, z, b);
    } else if (cz == a && cw != a) {
        // move the gap to u-w, then the previous case applies mirrored
        col.unassign(u, w);
        col.assign(u, z, a);
        col.unassign(v, z);
        col.unassign(w, z);
        col.assign(w, z, a);
        col.assign(v, z, b);
        col.assign(u, w, b);
    } else {  // cz == cw == a
        // With w-z removed, v's b-path can reach at most one of w and z
        // (both would have closed a b-cycle through the w-z edge).
        col.unassign(w, z);
        if (!col.same_path(b, v, w)) {
            col.unassign(v, w);
            col.assign(w, z, a);
            col.assign(v, w, b);
            col.assign(u, z, b);
        } else {
            col.unassign(u, w);
            col.assign(u, z, a);
            col.unassign(v, z);
            col.assign(w, z, a);
            col.assign(v, z, b);
            col.assign(u, w, b);
        }
    }
}

void extend_two_with_three(LinearColoring& col, const Configuration& cfg) {
    VertexId u = cfg.at[0], v = cfg.at[1], w = cfg.at[2], z = cfg.at[3],
             x = cfg.at[4], y = cfg.at[5];
    Color a = col.smallest_free(v);
    if (col.color_of(u, w) != a || !col.same_path(a, u, v)) {
        col.assign(u, v, a);
        return;
    }
    // Fills u-v with the color of v-z, then slots a back on v-z; if z's two
    // other edges both carry a, rotate them off first so z can take a.
    auto fill_through_z = [&]() {
        Color e0 = col.unassign(v, z);
        col.assign(u, v, e0);
        if (col.color_of(z, x) == a && col.color_of(z, y) == a) {
            Color e = col.color_of(x, y);
            col.unassign(z, x);
            col.unassign(z, y);
            col.unassign(x, y);
            col.assign(x, y, a);
            col.assign(z, x, e);
            col.assign(z, y, e);
        }
        col.assign(v, z, a);
    };
    if (col.color_of(v, z) != a) {
        fill_through_z();
        return;
    }
    if (col.color_of(z, y) == a) std::swap(x, y);
    if (col.color_of(z, x) != a) {
        throw UnreachableCase("path through the 3-vertex has no continuation");
    }
    Color b = col.color_of(z, y);
    Color f = col.color_of(x, v);
    if (f != b) {
        col.unassign(z, x);
        col.unassign(v, z);
        col.unassign(x, v);
        col.assign(z, x, f);
        col.assign(v, z, f);
        col.assign(x, v, a);
        fill_through_z();
        return;
    }
    Color c = col.color_of(v, w);
    if (c != b || !col.same_path(b, x, y)) {
        col.unassign(u, w);
        col.unassign(v, z);
        col.unassign(v, w);
        col.assign(u, w, c);
        col.assign(v, z, c);
        col.assign(v, w, a);
        col.assign(u, v, a);
    } else {
        Color d = col.color_of(v, y);
        col.unassign(v, x);
        if (col.same_path(b, v, y)) {
            // The path between x and y runs through v and w, so rerouting
            // v-y would close a cycle; leave it alone and chain u-v onto the
            // slot freed at v instead.
            col.unassign(x, z);
            col.unassign(y, z);
            col.assign(v, x, a);
            col.assign(x, z, b);
            col.assign(y, z, b);
            col.assign(u, v, b);
        } else {
            col.unassign(v, y);
            col.unassign(x, z);
            col.unassign(y, z);
            col.assign(v, x, a);
            col.assign(v, y, b);
            col.assign(x, z, b);
            col.assign(y, z, d);
            col.assign(u, v, d);
        }
    }
}

void extend_cubic_small(LinearColoring& col, const Configuration& cfg) {
    VertexId v = cfg.at[0], x = cfg.at[1], x1 = cfg.at[2], x2 = cfg.at[3],
             y = cfg.at[4];
    Color a = smallest_absent(col, v);
    if (a != 0) {
        if (col.color_of(x, x1) != a || col.color_of(x, x2) != a) {
            col.assign(v, x, a);
            return;
        }
        if (col.is_colored(x1, v)) {
            Color g1 = col.color_of(x1, v);
            col.unassign(x, x1);
            col.unassign(x1, v);
            col.assign(x, x1, g1);
            col.assign(v, x, g1);
            col.assign(x1, v, a);
        } else if (col.is_colored(x2, v)) {
            Color g2 = col.color_of(x2, v);
            col.unassign(x, x2);
            col.unassign(x2, v);
            col.assign(x, x2, g2);
            col.assign(v, x, g2);
            col.assign(x2, v, a);
        } else if (col.is_colored(x1, x2)) {
            Color h = col.color_of(x1, x2);
            col.unassign(x, x1);
            col.unassign(x, x2);
            col.unassign(x1, x2);
            col.assign(x, x1, h);
            col.assign(x, x2, h);
            col.assign(x1, x2, a);
            col.assign(v, x, a);
        } else {
            throw ExtensionFailed("cubic neighborhood lost its extra edge");
        }
        return;
    }
    // Every color touches v; pick the two smallest with a single edge.
    auto fc = col.free_colors(v);
    if (fc.size() < 2) {
        throw ExtensionFailed("fewer than two open colors at the small vertex");
    }
    Color ca = fc[0], cb = fc[1];
    Color c1 = col.color_of(x, x1), c2 = col.color_of(x, x2);
    if (ca != c1 && ca != c2) {
        col.assign(v, x, ca);
        return;
    }
    if (cb != c1 && cb != c2) {
        col.assign(v, x, cb);
        return;
    }
    if (!col.same_path(ca, v, x)) {
        col.assign(v, x, ca);
        return;
    }
    if (!col.same_path(cb, v, x)) {
        col.assign(v, x, cb);
        return;
    }
    // Both single-edge colors are blocked; route through the other cubic
    // neighbor.  Whether y can take ca is judged before v-y is opened up,
    // since its current color participates in the count.
    bool y_takes_a = col.count(y, ca) <= 1;
    Color c = col.unassign(v, y);
    col.assign(v, x, c);
    col.assign(v, y, y_takes_a ? ca : cb);
}

void extend_two_cubic(LinearColoring& col, const Configuration& cfg) {
    VertexId u = cfg.at[0], v = cfg.at[1], w = cfg.at[2], z = cfg.at[3],
             x = cfg.at[4], y = cfg.at[5];
    Color a = col.smallest_free(u);
    Color cz = col.color_of(v, z), cw = col.color_of(v, w);
    if (cz != a && cw != a) {
        col.assign(u, v, a);
        return;
    }

    // Both edges at v carry a: swap a onto z-w and reuse its color at v.
    auto both_sides = [&]() {
        Color b2 = col.color_of(z, w);
        col.unassign(v, z);
        col.unassign(v, w);
        col.unassign(z, w);
        col.assign(z, w, a);
        col.assign(v, z, b2);
        col.assign(v, w, b2);
        col.assign(u, v, a);
    };
    if (cz == a && cw == a) {
        both_sides();
        return;
    }
    if (cz == a) {
        // the pattern is symmetric in z and w; normalize to C(vw) = a
        std::swap(z, w);
        std::swap(cz, cw);
    }
    Color b = cz;
    if (!col.same_path(a, u, w)) {
        col.assign(u, v, a);
        return;
    }

    // C(vw) = a, C(vz) = b, and the a-path from u ends ...-w-v.
    auto one_side = [&](auto&& self, Color c) -> void {
        if (col.count(x, a) <= 1) {
            col.unassign(v, w);
            col.unassign(w, x);
            if (b == c && col.same_path(b, z, w)) {
                Color cxz = col.color_of(x, z);
                if (cxz == b) {
                    throw UnreachableCase("swap blocked both ways at two-cubic");
                }
                col.unassign(v, z);
                col.unassign(x, z);
                col.assign(w, x, a);
                col.assign(z, x, b);
                col.assign(v, z, cxz);
                col.assign(v, w, b);
                col.assign(u, v, a);
            } else {
                col.assign(w, x, a);
                col.assign(v, w, c);
                col.assign(u, v, a);
            }
            return;
        }
        // x carries a on both of its other edges
        Color d = col.color_of(z, y);
        if (d != c) {
            col.unassign(z, x);
            col.unassign(x, y);
            col.unassign(z, y);
            col.assign(z, x, d);
            col.assign(x, y, d);
            col.assign(z, y, a);
            self(self, c);
            return;
        }
        col.unassign(v, w);
        col.unassign(w, x);
        col.unassign(x, z);
        col.unassign(x, y);
        col.unassign(z, y);
        if (!(b == c && col.same_path(b, y, w))) {
            col.assign(w, x, a);
            col.assign(z, y, a);
            col.assign(v, w, c);
            col.assign(x, z, c);
            col.assign(x, y, c);
            col.assign(u, v, a);
            return;
        }
        // Restore and reroute depending on where the a-path from u runs.
        // Re-adding edges of a previously valid state cannot violate the
        // invariants, so the order here is arbitrary.
        col.assign(v, w, a);
        col.assign(w, x, c);
        col.assign(x, z, a);
        col.assign(x, y, a);
        col.assign(z, y, c);
        if (!col.same_path(a, u, x)) {
            col.unassign(v, z);
            col.unassign(x, z);
            col.unassign(v, w);
            col.unassign(w, x);
            col.assign(v, z, a);
            col.assign(w, x, a);
            col.assign(x, z, b);
            col.assign(v, w, b);
            col.assign(u, v, a);
            return;
        }
        col.unassign(x, y);
        bool through_z = col.same_path(a, u, x);
        col.assign(x, y, a);
        if (!through_z) {
            // a-path runs u-...-y-x-z
            Color c2 = col.color_of(u, z);
            col.unassign(u, z);
            col.unassign(x, z);
            col.assign(u, z, a);
            col.assign(x, z, c2);
            col.assign(u, v, c2);
            return;
        }
        // a-path runs u-...-z-x-y
        Color c3 = col.color_of(u, w);
        if (c3 != b) {
            col.unassign(u, w);
            col.unassign(v, w);
            col.unassign(v, z);
            col.unassign(x, z);
            col.unassign(w, x);
            col.assign(v, z, a);
            col.assign(u, w, a);
            col.assign(x, z, b);
            col.assign(v, w, b);
            col.assign(w, x, c3);
            col.assign(u, v, c3);
        } else {
            Color c4 = col.color_of(w, z);
            col.unassign(u, w);
            col.unassign(v, w);
            col.unassign(v, z);
            col.unassign(x, z);
            col.unassign(w, z);
            col.assign(v, z, a);
            col.assign(u, w, a);
            col.assign(w, z, b);
            col.assign(x, z, c4);
            col.assign(v, w, c4);
            col.assign(u, v, b);
        }
    };

    Color c = col.color_of(w, x);
    if (c != a) {
        one_side(one_side, c);
        return;
    }

    // C(wx) = a: the a-path from u continues through x.
    Color cxy = col.color_of(x, y);
    if (cxy == a) {
        Color c5 = col.color_of(x, z);
        if (c5 != b) {
            if (col.color_of(w, y) == c5) {
                // free the color of w-y by trading it with b on v-z / x-z
                col.unassign(v, z);
                col.unassign(x, z);
                col.assign(v, z, c5);
                col.assign(x, z, b);
                std::swap(b, c5);
            }
            Color g2 = col.color_of(w, y);
            col.unassign(w, x);
            col.unassign(x, y);
            col.unassign(w, y);
            col.assign(w, x, g2);
            col.assign(x, y, g2);
            col.assign(w, y, a);
            if (!col.same_path(a, u, w)) {
                col.assign(u, v, a);
                return;
            }
            one_side(one_side, g2);
        } else {
            Color c6 = col.color_of(u, w);
            col.unassign(w, x);
            col.unassign(u, w);
            col.assign(u, w, a);
            col.assign(w, x, c6);
            col.assign(u, v, c6);
        }
        return;
    }
    // C(xz) = a
    Color c7 = col.color_of(w, z);
    if (cxy != c7) {
        col.unassign(w, x);
        col.unassign(x, z);
        col.unassign(w, z);
        col.assign(w, x, c7);
        col.assign(x, z, c7);
        col.assign(w, z, a);
        if (!col.same_path(a, u, w)) {
            col.assign(u, v, a);
            return;
        }
        one_side(one_side, c7);
        return;
    }
    // C(xy) = C(wz) = c7: try to trade colors between v-z and x-z
    col.unassign(v, z);
    col.unassign(x, z);
    if (b == c7 && col.same_path(b, z, x)) {
        col.assign(v, z, b);  // restore
        col.assign(x, z, a);
        Color d2 = col.color_of(u, w);
        if (d2 != b) {
            col.unassign(u, w);
            col.unassign(w, x);
            col.assign(u, w, a);
            col.assign(w, x, d2);
            col.assign(u, v, d2);
            return;
        }
        Color e2 = col.color_of(u, z);
        if (e2 == a) {
            Color f2 = col.color_of(w, y);
            col.unassign(u, z);
            col.unassign(u, w);
            col.unassign(v, w);
            col.unassign(w, z);
            col.unassign(w, x);
            col.unassign(w, y);
            col.unassign(x, y);
            col.assign(u, z, b);
            col.assign(u, w, a);
            col.assign(w, z, a);
            col.assign(w, x, b);
            col.assign(w, y, b);
            col.assign(x, y, f2);
            col.assign(v, w, f2);
            col.assign(u, v, a);
        } else {
            col.unassign(u, z);
            col.unassign(v, z);
            col.unassign(x, z);
            col.unassign(u, w);
            col.unassign(v, w);
            col.assign(v, z, a);
            col.assign(u, z, b);
            col.assign(x, z, e2);
            col.assign(u, w, a);
            col.assign(v, w, b);
            col.assign(u, v, e2);
        }
        return;
    }
    col.assign(v, z, a);
    col.assign(x, z, b);
    both_sides();
}

void extend(LinearColoring& col, const ReductionStep& step) {
    try {
        switch (step.config.kind) {
            case ConfigKind::LightEdge:
                extend_light_edge(col, step.config);
                return;
            case ConfigKind::TwoVertexNonadjacent:
                extend_two_vertex(col, step.config);
                return;
            case ConfigKind::ConfigA:
                extend_config_a(col, step.config);
                return;
            case ConfigKind::ConfigB:
                extend_config_b(col, step.config);
                return;
            case ConfigKind::TwoPairs:
                extend_two_pairs(col, step.config);
                return;
            case ConfigKind::ChordedC4:
                extend_chorded_c4(col, step.config);
                return;
            case ConfigKind::TwoWithThree:
                extend_two_with_three(col, step.config);
                return;
            case ConfigKind::CubicSmall:
                extend_cubic_small(col, step.config);
                return;
            case ConfigKind::TwoCubic:
                extend_two_cubic(col, step.config);
                return;
        }
    } catch (const WouldExceedDegree& e) {
        throw ExtensionFailed(std::string(config_kind_name(step.config.kind)) +
                              " extension hit a degree bound: " + e.what());
    } catch (const WouldCloseCycle& e) {
        throw ExtensionFailed(std::string(config_kind_name(step.config.kind)) +
                              " extension would close a cycle: " + e.what());
    }
    throw UnreachableCase("unknown configuration kind");
}

}  // namespace linarb
