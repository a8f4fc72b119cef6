#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

// Replacement of every degree-2 vertex by a 4-clique block.  Block j replaces
// the j-th smallest degree-2 vertex v.  Its four vertices are the two
// attachment points attach0 = v and attach1 = n + 3j, plus two inner vertices
// n + 3j + 1 and n + 3j + 2.  The replaced vertex's two incident edges are
// split between the attachment points: the edge towards its smaller neighbor
// keeps endpoint v, the other one moves to attach1.
struct gadget_lift {
    graph base;
    graph lifted;
    std::vector<vertex> replaced;  // ascending

    int blocks() const { return static_cast<int>(replaced.size()); }
    vertex attach0(int j) const { return replaced[static_cast<std::size_t>(j)]; }
    vertex attach1(int j) const { return base.n() + 3 * j; }
    vertex inner2(int j) const { return base.n() + 3 * j + 1; }
    vertex inner3(int j) const { return base.n() + 3 * j + 2; }

    // Block owning x, or -1.
    int block_of(vertex x) const {
        if (x >= base.n()) return (x - base.n()) / 3;
        auto it = std::lower_bound(replaced.begin(), replaced.end(), x);
        if (it != replaced.end() && *it == x) return static_cast<int>(it - replaced.begin());
        return -1;
    }
};

inline gadget_lift degree2_to_k4(const graph& g) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("degree2_to_k4: input is not 2-vertex-connected");
    gadget_lift gl;
    gl.base = g;
    for (vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2) gl.replaced.push_back(v);
    const int k = static_cast<int>(gl.replaced.size());

    auto rank = [&](vertex v) -> int {
        auto it = std::lower_bound(gl.replaced.begin(), gl.replaced.end(), v);
        return (it != gl.replaced.end() && *it == v) ? static_cast<int>(it - gl.replaced.begin())
                                                     : -1;
    };
    auto map_endpoint = [&](vertex x, vertex other) -> vertex {
        int j = rank(x);
        if (j < 0) return x;
        // neighbors() is sorted, and x has exactly two neighbors.
        return (other == g.neighbors(x)[0]) ? gl.attach0(j) : gl.attach1(j);
    };

    std::vector<edge> es;
    for (const auto& [u, v] : g.edges())
        es.push_back(make_edge(map_endpoint(u, v), map_endpoint(v, u)));
    for (int j = 0; j < k; ++j) {
        vertex b[4] = {gl.attach0(j), gl.attach1(j), gl.inner2(j), gl.inner3(j)};
        for (int a = 0; a < 4; ++a)
            for (int c = a + 1; c < 4; ++c) es.push_back(make_edge(b[a], b[c]));
    }
    gl.lifted = graph(g.n() + 3 * k, es);
    return gl;
}

// Lift a spanning subgraph of the base graph: carry each of its edges through
// the endpoint map and thread every block with the canonical 3-edge path
// attach0 - inner2 - inner3 - attach1.  Adds exactly 3 edges per block.
inline graph lift_subgraph(const gadget_lift& gl, const graph& h) {
    detail::require(h.n() == gl.base.n(), "lift_subgraph: vertex count mismatch");
    for (const auto& [u, v] : h.edges())
        if (!gl.base.has_edge(u, v))
            throw precondition_violated("lift_subgraph: edge not in base graph");
    auto rank = [&](vertex v) { return gl.block_of(v); };
    auto map_endpoint = [&](vertex x, vertex other) -> vertex {
        int j = (x < gl.base.n()) ? rank(x) : -1;
        if (j < 0) return x;
        return (other == gl.base.neighbors(x)[0]) ? gl.attach0(j) : gl.attach1(j);
    };
    std::vector<edge> es;
    for (const auto& [u, v] : h.edges())
        es.push_back(make_edge(map_endpoint(u, v), map_endpoint(v, u)));
    for (int j = 0; j < gl.blocks(); ++j) {
        es.push_back(make_edge(gl.attach0(j), gl.inner2(j)));
        es.push_back(make_edge(gl.inner2(j), gl.inner3(j)));
        es.push_back(make_edge(gl.inner3(j), gl.attach1(j)));
    }
    return graph(gl.lifted.n(), es);
}

struct projected_subgraph {
    graph h;
    bool consistent = false;  // h is 2-vertex-connected and the size budget holds
};

// Project a spanning subgraph of the lifted graph back onto the base graph:
// drop block-internal edges, map attachment points back to the replaced
// vertex.  `consistent` reports whether the projection is itself feasible and
// the lifted subgraph spent at least 3 edges per block on top of it.
inline projected_subgraph lift_and_project(const gadget_lift& gl, const graph& h2) {
    detail::require(h2.n() == gl.lifted.n(), "lift_and_project: vertex count mismatch");
    for (const auto& [u, v] : h2.edges())
        if (!gl.lifted.has_edge(u, v))
            throw precondition_violated("lift_and_project: edge not in lifted graph");
    if (!h2.is_two_vertex_connected())
        throw gadget_malformed("lift_and_project: subgraph does not span the gadgets "
                               "2-connectedly");
    const int n = gl.base.n();
    auto back = [&](vertex x) -> vertex {
        if (x < n) return x;
        int role = (x - n) % 3;
        if (role != 0)
            throw gadget_malformed("lift_and_project: inner vertex on a non-block edge");
        return gl.replaced[static_cast<std::size_t>((x - n) / 3)];
    };
    std::vector<edge> es;
    for (const auto& [u, v] : h2.edges()) {
        int bu = gl.block_of(u), bv = gl.block_of(v);
        if (bu >= 0 && bu == bv) continue;  // block-internal
        es.push_back(make_edge(back(u), back(v)));
    }
    projected_subgraph out{graph(n, es), false};
    out.consistent = out.h.is_two_vertex_connected() &&
                     h2.m() >= out.h.m() + 3 * gl.blocks();
    return out;
}

}  // namespace earspan
