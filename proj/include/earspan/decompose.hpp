#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

namespace detail {

// BFS tree from src with ascending-neighbor tie-breaking; returns parents
// (-1 for src/unreached) and distances (-1 unreached). `allowed` masks the
// vertices the search may enter (src must be allowed).
inline void bfs_tree(const graph& g, vertex src, const std::vector<char>& allowed,
                     std::vector<int>& parent, std::vector<int>& dist) {
    const int n = g.n();
    parent.assign(static_cast<std::size_t>(n), -1);
    dist.assign(static_cast<std::size_t>(n), -1);
    std::deque<vertex> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push_back(src);
    while (!q.empty()) {
        vertex u = q.front();
        q.pop_front();
        for (vertex w : g.neighbors(u)) {
            if (!allowed[static_cast<std::size_t>(w)]) continue;
            if (dist[static_cast<std::size_t>(w)] != -1) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            parent[static_cast<std::size_t>(w)] = u;
            q.push_back(w);
        }
    }
}

inline std::vector<vertex> tree_path_to_root(const std::vector<int>& parent, vertex x) {
    std::vector<vertex> path;  // x, ..., src
    for (vertex cur = x; cur != -1; cur = parent[static_cast<std::size_t>(cur)])
        path.push_back(cur);
    return path;
}

// First non-root vertex on the tree path from x up to the BFS source; this
// identifies which child-subtree of the source x lies in.
inline vertex subtree_of(const std::vector<int>& parent, vertex x) {
    vertex cur = x;
    while (parent[static_cast<std::size_t>(cur)] != -1 &&
           parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(cur)])] != -1)
        cur = parent[static_cast<std::size_t>(cur)];
    return cur;
}

}  // namespace detail

// Builds an open ear decomposition of a 2-vertex-connected graph rooted at
// vertex 0. Deterministic: the first ear is a cycle through the root chosen
// among BFS-tree fundamental cycles (prefer odd length, then shortest, then
// lexicographically smallest vertex sequence); each later ear starts at the
// lowest covered vertex with an uncovered neighbor, runs through uncovered
// vertices, and re-enters the covered set (prefer odd length, then shortest,
// then smallest far endpoint). Leftover edges become trivial ears in
// ascending order.
inline ear_decomposition build_open_decomposition(const graph& g) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("build_open_decomposition: input is not 2-vertex-connected");
    const int n = g.n();
    const vertex root = 0;

    ear_decomposition d;
    d.root = root;

    std::vector<char> all(static_cast<std::size_t>(n), 1);
    std::vector<int> parent, dist;
    detail::bfs_tree(g, root, all, parent, dist);

    // Candidate first cycles: for every non-tree edge (a,b) whose endpoints
    // lie in different child-subtrees of the root, the cycle
    // root..a - ab - b..root is simple and passes through the root.
    std::optional<ear> best;
    auto better = [&](const ear& cand) {
        if (!best) return true;
        bool cand_odd = !cand.is_even(), best_odd = !best->is_even();
        if (cand_odd != best_odd) return cand_odd;
        if (cand.length() != best->length()) return cand.length() < best->length();
        return cand.v < best->v;
    };
    for (const auto& [a, b] : g.edges()) {
        if (parent[static_cast<std::size_t>(a)] == b || parent[static_cast<std::size_t>(b)] == a)
            continue;  // tree edge
        if (a == root || b == root) continue;
        if (detail::subtree_of(parent, a) == detail::subtree_of(parent, b)) continue;
        auto pa = detail::tree_path_to_root(parent, a);  // a .. root
        auto pb = detail::tree_path_to_root(parent, b);  // b .. root
        // root .. a, then b .. root
        std::vector<vertex> cyc(pa.rbegin(), pa.rend());
        cyc.insert(cyc.end(), pb.begin(), pb.end());
        ear cand(cyc);
        // Try both orientations for the lexicographic tie-break.
        ear rev = cand.reversed();
        if (rev.v < cand.v) cand = rev;
        if (better(cand)) best = cand;
    }
    detail::require(best.has_value(), "no cycle through the root in a 2-connected graph");
    d.ears.push_back(*best);

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (vertex x : best->v) covered[static_cast<std::size_t>(x)] = 1;

    // Grow open ears until every vertex is covered.
    while (true) {
        vertex a = -1, b = -1;
        for (vertex u = 0; u < n && a == -1; ++u) {
            if (!covered[static_cast<std::size_t>(u)]) continue;
            for (vertex w : g.neighbors(u))
                if (!covered[static_cast<std::size_t>(w)]) {
                    a = u;
                    b = w;
                    break;
                }
        }
        if (a == -1) break;

        // BFS from b through uncovered vertices; each covered vertex c != a
        // adjacent to the search tree yields a candidate ear a-b-...-c.
        std::vector<char> allowed(static_cast<std::size_t>(n), 0);
        for (vertex u = 0; u < n; ++u)
            allowed[static_cast<std::size_t>(u)] = !covered[static_cast<std::size_t>(u)];
        std::vector<int> par, dst;
        detail::bfs_tree(g, b, allowed, par, dst);

        std::optional<ear> pick;
        auto consider = [&](const ear& cand) {
            if (!pick) {
                pick = cand;
                return;
            }
            bool cand_odd = !cand.is_even(), pick_odd = !pick->is_even();
            if (cand_odd != pick_odd) {
                if (cand_odd) pick = cand;
                return;
            }
            if (cand.length() != pick->length()) {
                if (cand.length() < pick->length()) pick = cand;
                return;
            }
            if (cand.back() != pick->back()) {
                if (cand.back() < pick->back()) pick = cand;
                return;
            }
            if (cand.v < pick->v) pick = cand;
        };
        for (vertex u = 0; u < n; ++u) {
            if (dst[static_cast<std::size_t>(u)] == -1) continue;  // unreached or covered
            for (vertex c : g.neighbors(u)) {
                if (!covered[static_cast<std::size_t>(c)] || c == a) continue;
                auto up = detail::tree_path_to_root(par, u);  // u .. b
                std::vector<vertex> seq;
                seq.push_back(a);
                seq.insert(seq.end(), up.rbegin(), up.rend());  // b .. u
                seq.push_back(c);
                consider(ear(seq));
            }
        }
        detail::require(pick.has_value(), "stuck growing an ear in a 2-connected graph");
        d.ears.push_back(*pick);
        for (vertex x : pick->v) covered[static_cast<std::size_t>(x)] = 1;
    }

    // Leftover edges as trivial ears, ascending.
    std::map<edge, char> used;
    for (const auto& p : d.ears)
        for (const auto& e : p.edges()) used[e] = 1;
    for (const auto& e : g.edges())
        if (!used.count(e)) d.ears.push_back(trivial_ear(e.first, e.second));

    return d;
}

}  // namespace earspan
