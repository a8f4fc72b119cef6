#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace earspan {

using vertex = int;
using edge = std::pair<vertex, vertex>; // always stored with first < second

inline edge make_edge(vertex u, vertex v) {
    return u < v ? edge{u, v} : edge{v, u};
}

// Simple undirected graph. Immutable after construction; edges are normalized
// (u < v), deduplicated-checked, and kept sorted, as are adjacency lists.
class graph {
public:
    graph() = default;

    graph(int n, std::vector<edge> edges) : n_(n) {
        if (n < 0) throw precondition_violated("graph: vertex count must be non-negative");
        for (auto& e : edges) {
            if (e.first == e.second)
                throw not_simple("graph: self-loop at vertex " + std::to_string(e.first));
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first < 0 || e.second >= n)
                throw precondition_violated("graph: edge endpoint out of range: " +
                                            std::to_string(e.first) + "-" + std::to_string(e.second));
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw not_simple("graph: parallel edge " + std::to_string(edges[i].first) + "-" +
                                 std::to_string(edges[i].second));
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<edge>& edges() const { return edges_; }
    const std::vector<vertex>& neighbors(vertex v) const { return adj_.at(v); }
    int degree(vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(vertex u, vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<vertex> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            for (vertex w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

    // 2-vertex-connected: connected, at least 3 vertices, and no articulation
    // vertex (iterative lowpoint DFS).
    bool is_two_vertex_connected() const {
        if (n_ < 3) return false;
        if (!is_connected()) return false;
        std::vector<int> disc(n_, -1), low(n_, 0), parent(n_, -1), child_count(n_, 0);
        std::vector<std::size_t> next(n_, 0);
        std::vector<vertex> stack{0};
        int timer = 0;
        disc[0] = low[0] = timer++;
        while (!stack.empty()) {
            vertex u = stack.back();
            if (next[u] < adj_[u].size()) {
                vertex w = adj_[u][next[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    ++child_count[u];
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (parent[u] != -1) {
                    vertex p = parent[u];
                    low[p] = std::min(low[p], low[u]);
                    if (p != 0 && low[u] >= disc[p]) return false; // p is an articulation vertex
                }
            }
        }
        return child_count[0] < 2; // root articulation check
    }

    void check_min_degree(int d) const {
        for (vertex v = 0; v < n_; ++v)
            if (degree(v) < d)
                throw min_degree_too_low("vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(degree(v)) + " < " + std::to_string(d));
    }

    bool operator==(const graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::vector<vertex>> adj_;
};

// Subgraph of g induced by keeping exactly the given edges (same vertex set).
inline graph edge_subgraph(const graph& g, const std::vector<edge>& keep) {
    std::vector<edge> es;
    es.reserve(keep.size());
    for (auto [u, v] : keep) {
        if (!g.has_edge(u, v))
            throw precondition_violated("edge_subgraph: edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " not in graph");
        es.push_back(make_edge(u, v));
    }
    return graph(g.n(), std::move(es));
}

} // namespace earspan
