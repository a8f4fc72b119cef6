#pragma once

// Shared helpers for the test suite: fixture construction and the small
// instance corpus used by property tests.

#include <earspan/earspan.hpp>

#include <string>
#include <utility>
#include <vector>

namespace testsupport {

using namespace earspan;

// Build a decomposition from raw vertex sequences (root defaults to 0).
inline ear_decomposition make_dec(std::vector<std::vector<vertex>> ears, vertex root = 0) {
    ear_decomposition d;
    d.root = root;
    for (auto& v : ears) d.ears.emplace_back(v);
    return d;
}

// The graph whose edge set is exactly the union of a decomposition's ears.
inline graph graph_from_dec(int n, const ear_decomposition& d) {
    std::vector<edge> es;
    for (const auto& p : d.ears)
        for (auto e : p.edges()) es.push_back(e);
    return graph(n, es);
}

// Independent 2-vertex-connectivity check straight from the definition:
// connected, at least three vertices, and no single vertex whose removal
// disconnects the rest.
inline bool two_connected_by_definition(const graph& g) {
    int n = g.n();
    if (n < 3) return false;
    if (!g.is_connected()) return false;
    for (vertex cut = 0; cut < n; ++cut) {
        std::vector<char> seen(n, 0);
        seen[cut] = 1;
        vertex start = (cut == 0) ? 1 : 0;
        std::vector<vertex> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            for (vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n - 1) return false;
    }
    return true;
}

struct corpus_entry {
    std::string name;
    graph g;
};

// Small named instances, all 2-vertex-connected with minimum degree >= 3.
inline std::vector<corpus_entry> named_corpus() {
    std::vector<corpus_entry> out;
    for (const char* nm : {"k4", "k5", "k33", "prism", "petersen", "cube"})
        out.push_back({nm, gen_named(nm)});
    for (int k = 3; k <= 8; ++k)
        out.push_back({"wheel" + std::to_string(k), gen_wheel(k)});
    return out;
}

// Random cubic instances (only the 2-vertex-connected draws are kept).
inline std::vector<corpus_entry> random_cubic_corpus(std::vector<int> sizes,
                                                     unsigned seed_lo, unsigned seed_hi) {
    std::vector<corpus_entry> out;
    for (int n : sizes)
        for (unsigned s = seed_lo; s <= seed_hi; ++s) {
            graph g(1, {});
            try {
                g = gen_regular3(n, s);
            } catch (const generation_failed&) {
                continue;
            }
            if (!g.is_two_vertex_connected()) continue;
            out.push_back({"r3-" + std::to_string(n) + "-s" + std::to_string(s), g});
        }
    return out;
}

// Subdivide one edge of g: replace its lexicographically first edge (u,v)
// by u-w-v through a fresh vertex w. Produces a degree-2 vertex, which makes
// the result a useful base for the degree-2-to-K4 lift.
inline graph subdivide_first_edge(const graph& g) {
    std::vector<edge> es = g.edges();
    edge first = es.front();
    es.erase(es.begin());
    vertex w = g.n();
    es.push_back(make_edge(first.first, w));
    es.push_back(make_edge(first.second, w));
    return graph(g.n() + 1, es);
}

}  // namespace testsupport
