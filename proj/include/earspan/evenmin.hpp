#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

namespace detail {

// Exhaustive even-ear minimization. Soundness of the memoization: every
// edge of a candidate nontrivial ear is incident to one of its (fresh)
// internal vertices, so which edges earlier ears consumed never constrains
// later nontrivial ears — the covered vertex set is a complete state.
// Leftover edges always fit as trivial (odd) ears at the end.
class phi_search {
  public:
    explicit phi_search(const graph& g) : g_(g), n_(g.n()) {
        detail::require(n_ <= 30, "even-ear search needs at most 30 vertices");
        full_ = (n_ == 30) ? 0x3fffffffu : ((1u << n_) - 1u);
    }

    // Minimum even-ear count over all ear decompositions; `open_only`
    // restricts every ear after the first cycle to be open.
    int phi(bool open_only) {
        int best = INT_MAX_;
        for_each_cycle([&](const std::vector<vertex>& cyc) {
            int evens = ((static_cast<int>(cyc.size()) - 1) % 2 == 0) ? 1 : 0;
            best = std::min(best, evens + value(mask_of(cyc), open_only));
        });
        detail::require(best < INT_MAX_, "no cycle found in a 2-connected graph");
        return best;
    }

    // Lexicographically-first optimal open decomposition attaining phi.
    ear_decomposition reconstruct_open(int target) {
        ear_decomposition d;
        std::vector<std::vector<vertex>> cycles;
        for_each_cycle([&](const std::vector<vertex>& cyc) { cycles.push_back(cyc); });
        std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        uint32_t covered = 0;
        bool found = false;
        for (const auto& cyc : cycles) {
            int evens = ((static_cast<int>(cyc.size()) - 1) % 2 == 0) ? 1 : 0;
            if (evens + value(mask_of(cyc), /*open_only=*/true) == target) {
                d.root = cyc.front();
                d.ears.push_back(ear(cyc));
                covered = mask_of(cyc);
                found = true;
                break;
            }
        }
        detail::require(found, "even-ear reconstruction lost its target at the first cycle");

        while (covered != full_) {
            int rest = value(covered, /*open_only=*/true);
            std::set<std::vector<vertex>> cands;
            for_each_candidate(covered, /*open_only=*/true, [&](const std::vector<vertex>& seq) {
                std::vector<vertex> rev(seq.rbegin(), seq.rend());
                cands.insert(std::min(seq, rev));
            });
            std::vector<std::vector<vertex>> ordered(cands.begin(), cands.end());
            std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
            });
            bool stepped = false;
            for (const auto& seq : ordered) {
                ear cand(seq);
                uint32_t nxt = covered;
                for (std::size_t i = 1; i + 1 < seq.size(); ++i)
                    nxt |= (1u << seq[i]);
                if (cand.even_contribution() + value(nxt, true) == rest) {
                    d.ears.push_back(cand);
                    covered = nxt;
                    stepped = true;
                    break;
                }
            }
            detail::require(stepped, "even-ear reconstruction lost its target mid-way");
        }

        // Leftover edges as trivial ears, ascending.
        std::map<edge, char> used;
        for (const auto& p : d.ears)
            for (const auto& e : p.edges()) used[e] = 1;
        for (const auto& e : g_.edges())
            if (!used.count(e)) d.ears.push_back(trivial_ear(e.first, e.second));
        return d;
    }

  private:
    static constexpr int INT_MAX_ = 1 << 20;

    uint32_t mask_of(const std::vector<vertex>& seq) const {
        uint32_t m = 0;
        for (vertex x : seq) m |= (1u << x);
        return m;
    }

    // Enumerates every simple cycle once: smallest vertex first, and the
    // second vertex smaller than the last to fix a direction.
    template <typename F>
    void for_each_cycle(F&& emit) {
        std::vector<vertex> path;
        std::vector<char> on(static_cast<std::size_t>(n_), 0);
        for (vertex s = 0; s < n_; ++s) {
            path = {s};
            on[static_cast<std::size_t>(s)] = 1;
            cycle_dfs(s, s, path, on, emit);
            on[static_cast<std::size_t>(s)] = 0;
        }
    }

    template <typename F>
    void cycle_dfs(vertex s, vertex u, std::vector<vertex>& path, std::vector<char>& on, F&& emit) {
        for (vertex w : g_.neighbors(u)) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                std::vector<vertex> cyc = path;
                cyc.push_back(s);
                emit(cyc);
                continue;
            }
            if (w <= s || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            cycle_dfs(s, w, path, on, emit);
            path.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    }

    // Enumerates each nontrivial ear attachable to the covered set: start
    // at a covered vertex, run through fresh vertices, end at a covered
    // vertex (the same one only if closed ears are allowed and the ear has
    // at least three edges). Both orientations of open ears are emitted.
    template <typename F>
    void for_each_candidate(uint32_t covered, bool open_only, F&& emit) {
        std::vector<vertex> path;
        for (vertex a = 0; a < n_; ++a) {
            if (!(covered & (1u << a))) continue;
            path = {a};
            candidate_dfs(a, a, covered, 0u, path, open_only, emit);
        }
    }

    template <typename F>
    void candidate_dfs(vertex a, vertex u, uint32_t covered, uint32_t fresh,
                       std::vector<vertex>& path, bool open_only, F&& emit) {
        for (vertex w : g_.neighbors(u)) {
            uint32_t wb = 1u << w;
            if (covered & wb) {
                if (path.size() < 2) continue;  // need at least one internal
                if (w == a && (open_only || path.size() < 3)) continue;
                std::vector<vertex> seq = path;
                seq.push_back(w);
                emit(seq);
                continue;
            }
            if (fresh & wb) continue;
            path.push_back(w);
            candidate_dfs(a, w, covered, fresh | wb, path, open_only, emit);
            path.pop_back();
        }
    }

    int value(uint32_t covered, bool open_only) {
        if (covered == full_) return 0;
        auto& memo = open_only ? memo_open_ : memo_gen_;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        // Deduplicate candidates by (fresh-vertex mask, parity).
        std::unordered_set<uint64_t> sigs;
        for_each_candidate(covered, open_only, [&](const std::vector<vertex>& seq) {
            uint32_t in_mask = 0;
            for (std::size_t i = 1; i + 1 < seq.size(); ++i) in_mask |= (1u << seq[i]);
            uint64_t parity = ((seq.size() - 1) % 2 == 0) ? 1 : 0;
            sigs.insert((static_cast<uint64_t>(in_mask) << 1) | parity);
        });
        int best = INT_MAX_;
        for (uint64_t sig : sigs) {
            uint32_t in_mask = static_cast<uint32_t>(sig >> 1);
            int parity = static_cast<int>(sig & 1u);
            best = std::min(best, parity + value(covered | in_mask, open_only));
        }
        detail::require(best < INT_MAX_, "covered set not extensible in a 2-connected graph");
        memo.emplace(covered, best);
        return best;
    }

    const graph& g_;
    int n_;
    uint32_t full_ = 0;
    std::unordered_map<uint32_t, int> memo_open_;
    std::unordered_map<uint32_t, int> memo_gen_;
};

}  // namespace detail

// Exact minimum number of even ears over all ear decompositions, by
// exhaustive search. Guarded: refuses graphs with more than `guard_edges`
// edges.
inline int phi_bruteforce(const graph& g, int guard_edges = 16) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("phi_bruteforce: input is not 2-vertex-connected");
    if (g.m() > guard_edges)
        throw instance_too_large("phi_bruteforce: " + std::to_string(g.m()) +
                                 " edges exceeds guard of " + std::to_string(guard_edges));
    detail::phi_search s(g);
    return s.phi(/*open_only=*/false);
}

// Same minimum restricted to open decompositions; equals phi_bruteforce on
// 2-vertex-connected graphs (asserted wherever both are computed).
inline int phi_bruteforce_open(const graph& g, int guard_edges = 16) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("phi_bruteforce_open: input is not 2-vertex-connected");
    if (g.m() > guard_edges)
        throw instance_too_large("phi_bruteforce_open: " + std::to_string(g.m()) +
                                 " edges exceeds guard of " + std::to_string(guard_edges));
    detail::phi_search s(g);
    return s.phi(/*open_only=*/true);
}

struct evenmin_result {
    ear_decomposition d;
    bool certified = false;
};

// Replaces d with an open decomposition whose even-ear count is provably
// minimum, when the graph is small enough to certify; otherwise passes d
// through unchanged and uncertified. If d already attains the minimum it is
// returned as-is.
inline evenmin_result minimize_even_ears(const graph& g, const ear_decomposition& d,
                                         int guard_edges = 16) {
    {
        auto viol = validate(g, d);
        if (!viol.empty())
            throw precondition_violated("minimize_even_ears: invalid decomposition: " + viol[0]);
        if (!is_open_decomposition(d))
            throw precondition_violated("minimize_even_ears: decomposition is not open");
    }
    if (g.m() > guard_edges) return {d, false};

    detail::phi_search s(g);
    int open_min = s.phi(/*open_only=*/true);
    int general_min = s.phi(/*open_only=*/false);
    detail::require(open_min == general_min,
                    "open and general even-ear minima disagree on a 2-connected graph");
    if (d.count_even() == open_min) return {d, true};

    ear_decomposition out = s.reconstruct_open(open_min);
    detail::require(out.count_even() == open_min, "reconstruction missed the even-ear minimum");
    detail::require(is_valid(g, out) && is_open_decomposition(out),
                    "reconstruction produced an invalid decomposition");
    return {out, true};
}

}  // namespace earspan
