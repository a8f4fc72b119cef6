#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"
#include "earspan/nicify.hpp"

namespace earspan {

// Partition of the vertices by the ear that holds them internally: interiors
// of pendant short open ears (v_m), of pendant long open ears (v_d), and
// everything else — interiors of non-pendant ears, of the closed first ear,
// plus the root (v_i).
struct vertex_classes_t {
    std::vector<vertex> v_m, v_d, v_i;
};

inline vertex_classes_t vertex_classes(const graph& g, const ear_decomposition& d) {
    std::vector<int> cls(static_cast<std::size_t>(g.n()), 0);  // 0 = v_i
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const ear& e = d.ears[i];
        if (e.is_trivial()) continue;
        int tag = 0;
        if (counts_as_pendant_open(d, i)) tag = e.is_short() ? 1 : 2;
        if (tag == 0) continue;
        for (vertex x : e.internals()) cls[static_cast<std::size_t>(x)] = tag;
    }
    vertex_classes_t out;
    for (vertex x = 0; x < g.n(); ++x) {
        if (cls[static_cast<std::size_t>(x)] == 1)
            out.v_m.push_back(x);
        else if (cls[static_cast<std::size_t>(x)] == 2)
            out.v_d.push_back(x);
        else
            out.v_i.push_back(x);
    }
    return out;
}

// An eardrum: the components of the graph induced on v_m. In a nice
// decomposition each component is exactly the interior of one pendant short
// ear (one or two vertices), so the induced graph has maximum degree 1.
using eardrum = std::vector<std::vector<vertex>>;

inline eardrum eardrum_of(const graph& g, const ear_decomposition& d) {
    if (!is_nice(g, d)) throw not_nice("eardrum_of: decomposition is not nice");
    eardrum drum;
    std::set<vertex> vm;
    for (std::size_t i : pendant_short_open_ears(d)) {
        std::vector<vertex> comp = d.ears[i].internals();
        std::sort(comp.begin(), comp.end());
        for (vertex x : comp) vm.insert(x);
        drum.push_back(std::move(comp));
    }
    // Induced max degree 1: any edge inside v_m joins the two interior
    // vertices of a single 3-ear.
    for (const auto& [a, b] : g.edges()) {
        if (!vm.count(a) || !vm.count(b)) continue;
        bool same = false;
        for (const auto& comp : drum)
            if (comp.size() == 2 && std::min(a, b) == comp[0] && std::max(a, b) == comp[1])
                same = true;
        detail::require(same, "eardrum interior carries an edge across components");
    }
    std::sort(drum.begin(), drum.end());
    return drum;
}

// A maximum earmuff: for as many eardrum components as possible, a path
// whose interior is exactly the component and whose endpoints lie in v_i,
// such that the union of the chosen paths is a forest.
struct earmuff {
    std::vector<std::vector<vertex>> paths;
    int mu = 0;
};

namespace detail {

struct dsu {
    std::vector<int> parent;
    explicit dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[static_cast<std::size_t>(x)] == x ? x : find(parent[static_cast<std::size_t>(x)]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace detail

inline earmuff max_earmuff_bruteforce(const graph& g, const eardrum& drum,
                                      const std::vector<vertex>& v_i, int guard_components = 8) {
    if (static_cast<int>(drum.size()) > guard_components)
        throw instance_too_large("max_earmuff_bruteforce: " + std::to_string(drum.size()) +
                                 " components exceeds guard of " +
                                 std::to_string(guard_components));
    std::set<vertex> vi(v_i.begin(), v_i.end());

    // Candidate paths per component, canonical (smaller endpoint first),
    // sorted for determinism.
    std::vector<std::vector<std::vector<vertex>>> cands(drum.size());
    for (std::size_t c = 0; c < drum.size(); ++c) {
        std::set<std::vector<vertex>> paths;
        const auto& comp = drum[c];
        detail::require(comp.size() == 1 || comp.size() == 2, "eardrum component of bad size");
        if (comp.size() == 1) {
            vertex z = comp[0];
            for (vertex p : g.neighbors(z))
                for (vertex q : g.neighbors(z)) {
                    if (p >= q || !vi.count(p) || !vi.count(q)) continue;
                    paths.insert({p, z, q});
                }
        } else {
            vertex v = comp[0], w = comp[1];
            detail::require(g.has_edge(v, w), "two-vertex eardrum component must be an edge");
            auto add = [&](vertex inner_first, vertex inner_second) {
                for (vertex p : g.neighbors(inner_first))
                    for (vertex q : g.neighbors(inner_second)) {
                        if (p == q || !vi.count(p) || !vi.count(q)) continue;
                        std::vector<vertex> path{p, inner_first, inner_second, q};
                        if (path.front() > path.back())
                            std::reverse(path.begin(), path.end());
                        paths.insert(std::move(path));
                    }
            };
            add(v, w);
            add(w, v);
        }
        cands[c].assign(paths.begin(), paths.end());
    }

    // Map v_i vertices to dense ids for the forest check.
    std::map<vertex, int> id;
    for (vertex x : v_i) id.emplace(x, static_cast<int>(id.size()));

    earmuff best;
    std::vector<std::vector<vertex>> chosen;
    detail::dsu uf(id.size());

    // A cycle in the union of paths shows up as a repeated contact
    // component among the endpoints, so a union-find over v_i suffices.
    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (static_cast<int>(chosen.size() + (drum.size() - idx)) <= best.mu) return;
        if (idx == drum.size()) {
            best.mu = static_cast<int>(chosen.size());
            best.paths = chosen;
            return;
        }
        for (const auto& path : cands[idx]) {
            int a = uf.find(id.at(path.front()));
            int b = uf.find(id.at(path.back()));
            if (a == b) continue;
            uf.parent[static_cast<std::size_t>(a)] = b;
            chosen.push_back(path);
            dfs(idx + 1);
            chosen.pop_back();
            uf.parent[static_cast<std::size_t>(a)] = a;
        }
        dfs(idx + 1);  // leave this component unmatched
    };
    dfs(0);
    return best;
}

// Exact per-ear and aggregate edge-count inequalities for a decomposition,
// in integers. The aggregates bound the nontrivial-ear edge total by the
// even-ear and pendant counters.
struct claim_record {
    std::string name;
    long lhs = 0, rhs = 0;
    bool ok = false;
    bool exact = false;  // equality required (and checked) rather than <=
};

struct claims_result {
    std::vector<claim_record> records;
    bool c1_ok = false, c2_ok = false;
    bool all_ok = false;
};

inline claims_result check_claims(const graph& g, const ear_decomposition& d) {
    claims_result out;
    long m_prime = static_cast<long>(nontrivial_edges(d).size());
    long evens = d.count_even();
    long pi = count_pendant(d);
    long m_size = static_cast<long>(pendant_short_open_ears(d).size());
    vertex_classes_t cls = vertex_classes(g, d);
    long vi = static_cast<long>(cls.v_i.size());
    long n = g.n();

    auto push = [&](const std::string& name, long lhs, long rhs, bool exact) {
        claim_record r{name, lhs, rhs, exact ? (lhs == rhs) : (lhs <= rhs), exact};
        out.records.push_back(r);
    };

    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const ear& e = d.ears[i];
        if (e.is_trivial()) continue;
        long len = e.length(), inn = e.internal_count(), phip = e.even_contribution();
        std::string tag = "ear" + std::to_string(i + 1);
        if (counts_as_pendant_open(d, i)) {
            if (e.is_short()) {
                push(tag + "-pendant-short", 2 * len, 3 * inn + phip, true);
                push(tag + "-pendant-short-weight", 4 * len, 5 * inn + 3 * phip + 2, false);
            } else {
                push(tag + "-pendant-long", 2 * len, 3 * inn + phip - 2, false);
            }
        } else {
            push(tag + "-nonpendant", 4 * len, 5 * inn + 2 * phip, false);
        }
        if (len >= 5) push(tag + "-ge5", 4 * len, 5 * inn, false);
    }

    push("claim-1", 4 * m_prime, 5 * (n - 1) + 3 * evens + 2 * pi, false);
    out.c1_ok = out.records.back().ok;
    push("claim-2", 4 * m_prime, 6 * n + 2 * evens - 4 * pi + 4 * m_size - vi - 5, false);
    out.c2_ok = out.records.back().ok;
    out.all_ok = std::all_of(out.records.begin(), out.records.end(),
                             [](const claim_record& r) { return r.ok; });
    return out;
}

// Everything the report needs about a final (nice) decomposition: counters,
// vertex classes, eardrum/earmuff, the two lower bounds, and the claim
// checks. The earmuff pieces are absent above the component guard.
struct bounds_summary {
    int n = 0, m = 0;
    int evens = 0;
    int pi = 0, pi3 = 0;
    int m_size = 0;
    std::optional<int> mu;
    int v_i = 0, v_d = 0, v_m = 0;
    long l_phi = 0;
    std::optional<long> l_mu;
    bool c1_ok = false, c2_ok = false;
    std::optional<bool> lemma3_ok;
    claims_result claims;
    eardrum drum;
    earmuff muff;
};

inline bounds_summary analyze(const graph& g, const ear_decomposition& d,
                              int earmuff_guard = 8) {
    bounds_summary s;
    s.n = g.n();
    s.m = g.m();
    s.evens = d.count_even();
    s.pi = count_pendant(d);
    s.pi3 = count_pendant_3ears(d);
    vertex_classes_t cls = vertex_classes(g, d);
    s.v_i = static_cast<int>(cls.v_i.size());
    s.v_d = static_cast<int>(cls.v_d.size());
    s.v_m = static_cast<int>(cls.v_m.size());
    s.drum = eardrum_of(g, d);
    s.m_size = static_cast<int>(s.drum.size());
    s.l_phi = static_cast<long>(s.n) - 1 + s.evens;
    s.claims = check_claims(g, d);
    s.c1_ok = s.claims.c1_ok;
    s.c2_ok = s.claims.c2_ok;

    if (s.m_size <= earmuff_guard) {
        s.muff = max_earmuff_bruteforce(g, s.drum, cls.v_i, earmuff_guard);
        s.mu = s.muff.mu;
        s.l_mu = static_cast<long>(s.n) - 1 + s.m_size - s.muff.mu;
        // Independent forest verification of the returned paths.
        std::map<vertex, int> id;
        for (vertex x : cls.v_i) id.emplace(x, static_cast<int>(id.size()));
        detail::dsu uf(id.size());
        bool forest = true;
        std::set<vertex> used_interiors;
        for (const auto& path : s.muff.paths) {
            if (!uf.unite(id.at(path.front()), id.at(path.back()))) forest = false;
            for (std::size_t k = 1; k + 1 < path.size(); ++k) {
                forest = forest && !used_interiors.count(path[k]);
                used_interiors.insert(path[k]);
            }
        }
        s.lemma3_ok = forest && (s.muff.mu <= s.v_i - 1);
    }
    return s;
}

}  // namespace earspan
