#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

// An ear is a walk stored as its vertex sequence; the edge count is
// size()-1. A trivial ear is a single edge. A closed ear starts and ends
// at the same vertex. Internal vertices are everything strictly between
// the two ends.
struct ear {
    std::vector<vertex> v;

    ear() = default;
    explicit ear(std::vector<vertex> seq) : v(std::move(seq)) {
        if (v.size() < 2) throw precondition_violated("ear: needs at least two vertices");
    }
    ear(std::initializer_list<vertex> seq) : ear(std::vector<vertex>(seq)) {}

    int length() const { return static_cast<int>(v.size()) - 1; }

    vertex front() const { return v.front(); }
    vertex back() const { return v.back(); }

    bool is_trivial() const { return length() == 1; }
    bool is_nontrivial() const { return length() >= 2; }
    bool is_closed() const { return front() == back(); }
    bool is_open() const { return !is_closed(); }
    // Short and long are only meaningful for nontrivial ears.
    bool is_short() const { return length() == 2 || length() == 3; }
    bool is_long() const { return length() >= 4; }
    bool is_even() const { return length() % 2 == 0; }

    // 1 for an even ear, 0 otherwise; summing this over a decomposition
    // gives its even-ear count.
    int even_contribution() const { return is_even() ? 1 : 0; }

    std::vector<vertex> internals() const {
        return std::vector<vertex>(v.begin() + 1, v.end() - 1);
    }
    int internal_count() const { return static_cast<int>(v.size()) - 2; }

    bool has_internal(vertex x) const {
        return std::find(v.begin() + 1, v.end() - 1, x) != v.end() - 1;
    }
    bool has_endpoint(vertex x) const { return front() == x || back() == x; }

    std::vector<edge> edges() const {
        std::vector<edge> es;
        es.reserve(v.size() - 1);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) es.push_back(make_edge(v[i], v[i + 1]));
        return es;
    }

    bool contains_edge(vertex a, vertex b) const {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if ((v[i] == a && v[i + 1] == b) || (v[i] == b && v[i + 1] == a)) return true;
        return false;
    }

    ear reversed() const {
        ear r = *this;
        std::reverse(r.v.begin(), r.v.end());
        return r;
    }

    // The sequence from endpoint `from` to the other endpoint.
    ear oriented_from(vertex from) const {
        if (front() == from) return *this;
        if (back() == from) return reversed();
        throw precondition_violated("ear: oriented_from vertex is not an endpoint");
    }

    bool operator==(const ear& o) const { return v == o.v; }
};

inline ear trivial_ear(vertex a, vertex b) {
    if (a == b) throw precondition_violated("trivial ear: endpoints coincide");
    if (a > b) std::swap(a, b);
    return ear({a, b});
}

struct ear_decomposition {
    vertex root = 0;
    std::vector<ear> ears;

    int count_even() const {
        int c = 0;
        for (const auto& e : ears) c += e.even_contribution();
        return c;
    }
    int count_nontrivial() const {
        int c = 0;
        for (const auto& e : ears) c += e.is_nontrivial() ? 1 : 0;
        return c;
    }
    int count_trivial() const { return static_cast<int>(ears.size()) - count_nontrivial(); }
};

// Characteristic vector of the vertices covered by the root plus the ears
// strictly before index idx.
inline std::vector<char> covered_before(const ear_decomposition& d, std::size_t idx, int n) {
    std::vector<char> cov(static_cast<std::size_t>(n), 0);
    if (d.root >= 0 && d.root < n) cov[static_cast<std::size_t>(d.root)] = 1;
    for (std::size_t i = 0; i < idx && i < d.ears.size(); ++i)
        for (vertex x : d.ears[i].v)
            if (x >= 0 && x < n) cov[static_cast<std::size_t>(x)] = 1;
    return cov;
}

// Structural validation of an ear decomposition against its graph. Returns
// human-readable violations (empty means valid). Ears are numbered from 1
// in messages. Checks, per ear: edges exist, no immediate repeats, internal
// simplicity, endpoints covered by the prefix (the first ear must be closed
// at the root), internal vertices fresh. Globally: every edge of g used
// exactly once and every vertex covered.
inline std::vector<std::string> validate(const graph& g, const ear_decomposition& d) {
    std::vector<std::string> out;
    const int n = g.n();
    auto earname = [](std::size_t i) { return "ear " + std::to_string(i + 1); };

    if (d.root < 0 || d.root >= n) {
        out.push_back("root " + std::to_string(d.root) + " out of range");
        return out;
    }
    if (d.ears.empty()) {
        if (g.m() > 0) out.push_back("decomposition has no ears");
        return out;
    }

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    covered[static_cast<std::size_t>(d.root)] = 1;
    std::map<edge, int> used;

    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const ear& p = d.ears[i];
        if (p.v.size() < 2) {
            out.push_back(earname(i) + " has fewer than two vertices");
            continue;
        }
        bool vertices_ok = true;
        for (vertex x : p.v)
            if (x < 0 || x >= n) {
                out.push_back(earname(i) + " vertex " + std::to_string(x) + " out of range");
                vertices_ok = false;
            }
        if (!vertices_ok) continue;

        for (std::size_t j = 0; j + 1 < p.v.size(); ++j) {
            if (p.v[j] == p.v[j + 1]) {
                out.push_back(earname(i) + " repeats vertex " + std::to_string(p.v[j]) +
                              " consecutively");
                continue;
            }
            if (!g.has_edge(p.v[j], p.v[j + 1]))
                out.push_back(earname(i) + " edge " + std::to_string(p.v[j]) + "-" +
                              std::to_string(p.v[j + 1]) + " not in graph");
            else
                used[make_edge(p.v[j], p.v[j + 1])]++;
        }

        // Simplicity: all vertices distinct, except that the last may equal
        // the first (closed ear).
        {
            std::vector<vertex> inner(p.v.begin(), p.v.end() - 1);
            std::sort(inner.begin(), inner.end());
            if (std::adjacent_find(inner.begin(), inner.end()) != inner.end())
                out.push_back(earname(i) + " repeats a vertex");
            else if (p.is_open()) {
                // front()..back() all distinct already ensured by inner check
                // plus back() not among the rest:
                if (std::binary_search(inner.begin(), inner.end(), p.back()))
                    out.push_back(earname(i) + " repeats a vertex");
            }
        }

        if (i == 0) {
            if (!p.is_closed() || p.front() != d.root)
                out.push_back("ear 1 must start and end at the root");
        } else {
            if (!covered[static_cast<std::size_t>(p.front())])
                out.push_back(earname(i) + " endpoint " + std::to_string(p.front()) +
                              " not previously covered");
            if (!covered[static_cast<std::size_t>(p.back())])
                out.push_back(earname(i) + " endpoint " + std::to_string(p.back()) +
                              " not previously covered");
        }
        for (std::size_t j = 1; j + 1 < p.v.size(); ++j)
            if (covered[static_cast<std::size_t>(p.v[j])])
                out.push_back(earname(i) + " internal vertex " + std::to_string(p.v[j]) +
                              " already present");

        for (vertex x : p.v) covered[static_cast<std::size_t>(x)] = 1;
    }

    for (const auto& [e, cnt] : used)
        if (cnt > 1)
            out.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                          " used " + std::to_string(cnt) + " times");
    for (const auto& e : g.edges())
        if (used.find(e) == used.end())
            out.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                          " not covered");
    for (int x = 0; x < n; ++x)
        if (!covered[static_cast<std::size_t>(x)])
            out.push_back("vertex " + std::to_string(x) + " not covered");
    return out;
}

inline bool is_valid(const graph& g, const ear_decomposition& d) {
    return validate(g, d).empty();
}

// Open decomposition: the first ear is the only closed one.
inline bool is_open_decomposition(const ear_decomposition& d) {
    if (d.ears.empty()) return false;
    if (!d.ears[0].is_closed()) return false;
    for (std::size_t i = 1; i < d.ears.size(); ++i)
        if (d.ears[i].is_closed()) return false;
    return true;
}

// A nontrivial ear is pendant when no other nontrivial ear has an endpoint
// among its internal vertices. Throws on trivial ears and bad indices.
inline bool classify_pendant(const ear_decomposition& d, std::size_t idx) {
    if (idx >= d.ears.size()) throw precondition_violated("classify_pendant: index out of range");
    const ear& p = d.ears[idx];
    if (p.is_trivial()) throw precondition_violated("classify_pendant: ear is trivial");
    for (std::size_t j = 0; j < d.ears.size(); ++j) {
        if (j == idx || d.ears[j].is_trivial()) continue;
        if (p.has_internal(d.ears[j].front()) || p.has_internal(d.ears[j].back())) return false;
    }
    return true;
}

// Counters used by the analysis. The closed first ear is never counted:
// the pendant counters range over open nontrivial ears only.
inline bool counts_as_pendant_open(const ear_decomposition& d, std::size_t idx) {
    const ear& p = d.ears[idx];
    if (p.is_trivial() || p.is_closed()) return false;
    return classify_pendant(d, idx);
}

// pi: pendant open nontrivial ears.
inline int count_pendant(const ear_decomposition& d) {
    int c = 0;
    for (std::size_t i = 0; i < d.ears.size(); ++i)
        if (counts_as_pendant_open(d, i)) ++c;
    return c;
}

// pi3: pendant open 3-ears.
inline int count_pendant_3ears(const ear_decomposition& d) {
    int c = 0;
    for (std::size_t i = 0; i < d.ears.size(); ++i)
        if (d.ears[i].length() == 3 && counts_as_pendant_open(d, i)) ++c;
    return c;
}

// Pendant short open ears (2 or 3 edges); their internal vertices form the
// eardrum ground set.
inline std::vector<std::size_t> pendant_short_open_ears(const ear_decomposition& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.ears.size(); ++i)
        if (d.ears[i].is_nontrivial() && d.ears[i].is_short() && counts_as_pendant_open(d, i))
            out.push_back(i);
    return out;
}

// Edges of all nontrivial ears: the output subgraph of the approximation.
inline std::vector<edge> nontrivial_edges(const ear_decomposition& d) {
    std::vector<edge> es;
    for (const auto& p : d.ears)
        if (p.is_nontrivial())
            for (const auto& e : p.edges()) es.push_back(e);
    std::sort(es.begin(), es.end());
    return es;
}

inline nlohmann::ordered_json ears_to_json(const std::vector<ear>& ears) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : ears) arr.push_back(p.v);
    return arr;
}

inline nlohmann::ordered_json to_json(const ear_decomposition& d) {
    nlohmann::ordered_json j;
    j["root"] = d.root;
    j["ears"] = ears_to_json(d.ears);
    return j;
}

inline ear_decomposition decomposition_from_json(const nlohmann::json& j) {
    ear_decomposition d;
    d.root = j.at("root").get<vertex>();
    for (const auto& seq : j.at("ears")) d.ears.push_back(ear(seq.get<std::vector<vertex>>()));
    return d;
}

}  // namespace earspan
