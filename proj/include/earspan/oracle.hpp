#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

struct opt_result {
    int opt = 0;
    std::vector<edge> witness;
};

namespace detail {

class opt_search {
  public:
    explicit opt_search(const graph& g) : g_(g), n_(g.n()), edges_(g.edges()) {}

    opt_result run() {
        const int m = static_cast<int>(edges_.size());
        for (int k = n_; k <= m; ++k) {
            taken_.clear();
            deg_.assign(static_cast<std::size_t>(n_), 0);
            if (dfs(0, k)) return {k, taken_};
        }
        require(false, "the graph itself should be a feasible solution");
        return {};
    }

  private:
    bool feasible(const std::vector<edge>& chosen, int suffix_from) const {
        std::vector<edge> es = chosen;
        for (std::size_t i = static_cast<std::size_t>(suffix_from); i < edges_.size(); ++i)
            es.push_back(edges_[i]);
        return graph(n_, es).is_two_vertex_connected();
    }

    bool dfs(int idx, int k) {
        int need = k - static_cast<int>(taken_.size());
        if (need == 0) return graph(n_, taken_).is_two_vertex_connected();
        if (static_cast<int>(edges_.size()) - idx < need) return false;
        // Every vertex needs degree 2; one edge fixes at most two deficits.
        int deficiency = 0;
        for (int v = 0; v < n_; ++v) deficiency += std::max(0, 2 - deg_[static_cast<std::size_t>(v)]);
        if (deficiency > 2 * need) return false;

        const auto& [u, v] = edges_[static_cast<std::size_t>(idx)];
        // Take (unless a tight solution already saturated an endpoint).
        bool cap = (k == n_) && (deg_[static_cast<std::size_t>(u)] >= 2 ||
                                 deg_[static_cast<std::size_t>(v)] >= 2);
        if (!cap) {
            taken_.push_back(edges_[static_cast<std::size_t>(idx)]);
            deg_[static_cast<std::size_t>(u)]++;
            deg_[static_cast<std::size_t>(v)]++;
            if (dfs(idx + 1, k)) return true;
            deg_[static_cast<std::size_t>(u)]--;
            deg_[static_cast<std::size_t>(v)]--;
            taken_.pop_back();
        }
        // Skip, but only if the remaining pool can still reach feasibility.
        if (!feasible(taken_, idx + 1)) return false;
        return dfs(idx + 1, k);
    }

    const graph& g_;
    int n_;
    std::vector<edge> edges_;
    std::vector<edge> taken_;
    std::vector<int> deg_;
};

}  // namespace detail

// Exact minimum 2-vertex-connected spanning subgraph by guarded exhaustive
// search: subsets are explored in increasing size and lexicographic order,
// so the first feasible subset found is a deterministic witness.
inline opt_result opt_2vcss_bruteforce(const graph& g, int guard_edges = 20) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("opt_2vcss_bruteforce: input is not 2-vertex-connected");
    if (g.m() > guard_edges)
        throw instance_too_large("opt_2vcss_bruteforce: " + std::to_string(g.m()) +
                                 " edges exceeds guard of " + std::to_string(guard_edges));
    detail::opt_search s(g);
    return s.run();
}

// Independent Hamiltonian-cycle backtracker (fixed start at vertex 0,
// neighbors in ascending order).
inline bool hamiltonian_cycle_exists(const graph& g) {
    const int n = g.n();
    if (n < 3) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<vertex> path{0};
    used[0] = 1;
    std::function<bool()> step = [&]() -> bool {
        if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), 0);
        for (vertex w : g.neighbors(path.back())) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (step()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return step();
}

// The two searches must agree: the minimum has size n exactly when a
// Hamiltonian cycle exists.
inline void hamiltonicity_crosscheck(const graph& g, int opt) {
    bool ham = hamiltonian_cycle_exists(g);
    detail::require((opt == g.n()) == ham,
                    "optimal size and Hamiltonicity disagree between independent searches");
}

}  // namespace earspan
