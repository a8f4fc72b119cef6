#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "earspan/errors.hpp"
#include "earspan/gadget.hpp"
#include "earspan/graph.hpp"

namespace earspan {

// Deterministic RNG: a fixed mt19937_64 stream with hand-rolled rejection
// sampling and Fisher-Yates, so outputs are identical across platforms and
// standard-library versions.
class rng {
  public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        detail::require(lo <= hi, "rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform(0, i))]);
    }

  private:
    std::mt19937_64 eng_;
};

inline graph gen_cycle(int n) {
    if (n < 3) throw generation_failed("cycle needs at least 3 vertices");
    std::vector<edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return graph(n, es);
}

// Rim cycle 0..k-1 plus hub k joined to every rim vertex.
inline graph gen_wheel(int k) {
    if (k < 3) throw generation_failed("wheel needs a rim of at least 3");
    std::vector<edge> es;
    for (int i = 0; i < k; ++i) {
        es.push_back(make_edge(i, (i + 1) % k));
        es.push_back(make_edge(i, k));
    }
    return graph(k + 1, es);
}

inline graph gen_hypercube(int d) {
    if (d < 1 || d > 10) throw generation_failed("hypercube dimension out of range");
    int n = 1 << d;
    std::vector<edge> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) es.push_back(make_edge(v, v | (1 << b)));
    return graph(n, es);
}

inline graph gen_complete(int n) {
    if (n < 3) throw generation_failed("complete graph needs at least 3 vertices");
    std::vector<edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back(make_edge(u, v));
    return graph(n, es);
}

// Random 3-regular simple graph by the pairing model: three stubs per vertex,
// shuffled, paired consecutively; retry on loops or parallel edges.
inline graph gen_regular3(int n, std::uint64_t seed, int max_tries = 500) {
    if (n < 4 || n % 2 != 0)
        throw generation_failed("3-regular graphs need an even vertex count of at least 4");
    rng r(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c) stubs.push_back(v);
        r.shuffle(stubs);
        std::vector<edge> es;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edge e = make_edge(u, v);
            if (std::find(es.begin(), es.end(), e) != es.end()) {
                ok = false;
                break;
            }
            es.push_back(e);
        }
        if (ok) return graph(n, es);
    }
    throw generation_failed("pairing model failed to produce a simple 3-regular graph");
}

inline graph gen_named(const std::string& name) {
    if (name == "k4") return gen_complete(4);
    if (name == "k5") return gen_complete(5);
    if (name == "k33")
        return graph(6, {make_edge(0, 3), make_edge(0, 4), make_edge(0, 5), make_edge(1, 3),
                         make_edge(1, 4), make_edge(1, 5), make_edge(2, 3), make_edge(2, 4),
                         make_edge(2, 5)});
    if (name == "prism")
        return graph(6, {make_edge(0, 1), make_edge(1, 2), make_edge(2, 0), make_edge(3, 4),
                         make_edge(4, 5), make_edge(5, 3), make_edge(0, 3), make_edge(1, 4),
                         make_edge(2, 5)});
    if (name == "petersen") {
        std::vector<edge> es;
        for (int i = 0; i < 5; ++i) {
            es.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
            es.push_back(make_edge(i, i + 5));                // spokes
            es.push_back(make_edge(i + 5, ((i + 2) % 5) + 5));  // inner pentagram
        }
        return graph(10, es);
    }
    if (name == "cube") return gen_hypercube(3);
    throw generation_failed("unknown named graph: " + name);
}

inline graph gen_gadget_lift(const graph& base) { return degree2_to_k4(base).lifted; }

}  // namespace earspan
