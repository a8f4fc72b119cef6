#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"
#include "earspan/pendantize.hpp"
#include "earspan/trace.hpp"

namespace earspan {

namespace detail {

// First edge joining internal vertices of two distinct short open ears, in
// scan order: ears by position, internals along the ear, neighbors by id.
struct short_edge_violation {
    std::size_t i = 0, j = 0;  // i < j always (the scan sees the pair from i first)
    vertex p = -1, q = -1;     // p internal to ears[i], q internal to ears[j]
};

inline bool short_open(const ear& e) { return e.is_nontrivial() && e.is_short() && e.is_open(); }

inline std::optional<short_edge_violation> find_short_short_edge(const graph& g,
                                                                 const ear_decomposition& d,
                                                                 bool only_2ear_pairs) {
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        if (!short_open(d.ears[i])) continue;
        for (std::size_t pos = 1; pos + 1 < d.ears[i].v.size(); ++pos) {
            vertex p = d.ears[i].v[pos];
            for (vertex q : g.neighbors(p)) {
                for (std::size_t j = 0; j < d.ears.size(); ++j) {
                    if (j == i || !short_open(d.ears[j]) || !d.ears[j].has_internal(q)) continue;
                    if (only_2ear_pairs &&
                        (d.ears[i].length() != 2 || d.ears[j].length() != 2))
                        continue;
                    require(j > i, "scan should have met this pair from the earlier ear");
                    return short_edge_violation{i, j, p, q};
                }
            }
        }
    }
    return std::nullopt;
}

inline std::size_t trivial_carrier(const ear_decomposition& d, vertex a, vertex b) {
    for (std::size_t j = 0; j < d.ears.size(); ++j)
        if (d.ears[j].contains_edge(a, b)) {
            require(d.ears[j].is_trivial(),
                    "edge between short-ear interiors must ride a trivial ear");
            return j;
        }
    require(false, "edge between short-ear interiors has no carrying ear");
    return 0;  // unreachable
}

// Rebuild with the replacement ear S at the latest involved slot: if that
// slot is deleted S takes its place, otherwise (a kept long ear the rewrite
// attaches into) S goes immediately after it.
inline ear_decomposition nicify_rebuild(const ear_decomposition& d, std::size_t slot,
                                        const ear& s, const std::set<std::size_t>& drop,
                                        const std::vector<ear>& appended) {
    ear_decomposition out;
    out.root = d.root;
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        bool dropped = drop.count(i) > 0;
        if (!dropped) out.ears.push_back(d.ears[i]);
        if (i == slot) out.ears.push_back(s);
    }
    for (const auto& e : appended) out.ears.push_back(e);
    move_premature_trivials_to_tail(out);
    return out;
}

}  // namespace detail

// A decomposition is nice when every short open ear is pendant and no edge
// of the graph joins internal vertices of two distinct short open ears.
inline bool is_nice(const graph& g, const ear_decomposition& d) {
    for (std::size_t i = 0; i < d.ears.size(); ++i)
        if (detail::short_open(d.ears[i]) && !classify_pendant(d, i)) return false;
    return !detail::find_short_short_edge(g, d, false).has_value();
}

struct nicify_options {
    bool certified = false;
    trace_log* trace = nullptr;
};

// Removes every edge between interiors of two distinct short ears by
// merging the ears involved into one long ear (plus leftover trivial ears).
// Expects a pendantized decomposition (every short ear pendant).
inline ear_decomposition nicify(const graph& g, const ear_decomposition& d,
                                nicify_options opt = {}) {
    if (g.min_degree() < 3)
        throw precondition_violated("nicify: minimum degree 3 required");
    {
        auto viol = validate(g, d);
        if (!viol.empty()) throw precondition_violated("nicify: invalid decomposition: " + viol[0]);
        if (!is_open_decomposition(d))
            throw precondition_violated("nicify: decomposition is not open");
        for (std::size_t i = 0; i < d.ears.size(); ++i)
            if (detail::short_open(d.ears[i]) && !classify_pendant(d, i))
                throw precondition_violated("nicify: a short ear is not pendant");
    }

    ear_decomposition cur = d;
    const int evens_start = cur.count_even();
    int iter = 0;
    const long cap = 16L * (g.n() + g.m()) * (g.n() + g.m()) + 256;

    auto count_short = [&]() {
        int c = 0;
        for (const auto& e : cur.ears) c += detail::short_open(e) ? 1 : 0;
        return c;
    };
    auto post_step = [&](const std::string& label, const std::vector<ear>& touched,
                         int shorts_before) {
        auto viol = validate(g, cur);
        detail::require(viol.empty(),
                        "nicify step broke validity: " + (viol.empty() ? "" : viol[0]));
        detail::require(count_short() < shorts_before,
                        "nicify step did not reduce the short-ear count");
        if (opt.trace) opt.trace->step("nicify", iter, label, touched, cur.count_even());
    };

    // Adjacent 2-ear interiors: splicing them into a 3-ear removes two even
    // ears, which contradicts a certified minimum — only uncertified inputs
    // can carry this pattern, and for them it is a strict improvement.
    while (auto v2 = detail::find_short_short_edge(g, cur, true)) {
        detail::require(++iter <= cap, "nicify exceeded its iteration cap");
        detail::require(!opt.certified, "certified decomposition has adjacent 2-ear interiors");
        const ear pa = cur.ears[v2->i], pb = cur.ears[v2->j];
        vertex z = v2->p, w = v2->q;
        std::size_t te = detail::trivial_carrier(cur, z, w);
        vertex a1 = std::min(pa.front(), pa.back());
        vertex c1 = -1;
        {
            vertex lo = std::min(pb.front(), pb.back()), hi = std::max(pb.front(), pb.back());
            c1 = (lo != a1) ? lo : hi;
        }
        detail::require(c1 != a1, "2-ear splice would close on itself");
        ear s({a1, z, w, c1});
        int shorts_before = count_short();
        std::set<std::size_t> drop{v2->i, v2->j, te};
        std::vector<ear> appended{
            trivial_ear(z, (a1 == pa.front()) ? pa.back() : pa.front()),
            trivial_ear(w, (c1 == pb.front()) ? pb.back() : pb.front())};
        cur = detail::nicify_rebuild(cur, std::max(v2->i, v2->j), s, drop, appended);
        post_step("N0-improve", {pa, pb}, shorts_before);
    }

    while (auto vio = detail::find_short_short_edge(g, cur, false)) {
        detail::require(++iter <= cap, "nicify exceeded its iteration cap");
        int shorts_before = count_short();
        const ear pi = cur.ears[vio->i], pj = cur.ears[vio->j];
        detail::require(pi.length() == 3 || pj.length() == 3,
                        "2-ear pair survived the splice pass");

        if (pi.length() != pj.length()) {
            // One 2-ear and one 3-ear. Name the 2-ear P' (internal z) and
            // the 3-ear P'' oriented c-x-y-d with the edge hitting x.
            bool i_is_2 = pi.length() == 2;
            const ear& p2e = i_is_2 ? pi : pj;
            const ear& p3e = i_is_2 ? pj : pi;
            vertex z = i_is_2 ? vio->p : vio->q;
            vertex x = i_is_2 ? vio->q : vio->p;
            ear p3 = (p3e.v[1] == x) ? p3e : p3e.reversed();
            vertex c = p3.v[0], y = p3.v[2], dd = p3.v[3];
            std::size_t te = detail::trivial_carrier(cur, z, x);
            vertex eprime;
            {
                vertex lo = std::min(p2e.front(), p2e.back()),
                       hi = std::max(p2e.front(), p2e.back());
                eprime = (lo != dd) ? lo : hi;
                detail::require(eprime != dd, "folded ear would close on itself");
            }
            vertex other = (eprime == p2e.front()) ? p2e.back() : p2e.front();
            ear s({eprime, z, x, y, dd});
            detail::require(s.is_open() && s.is_long(), "folded ear must be open and long");
            std::set<std::size_t> drop{vio->i, vio->j, te};
            cur = detail::nicify_rebuild(cur, std::max(vio->i, vio->j), s, drop,
                                         {trivial_ear(other, z), trivial_ear(c, x)});
            if (opt.certified)
                detail::require(cur.count_even() == evens_start,
                                "nicify changed the even count of a certified decomposition");
            post_step("N1", {pi, pj}, shorts_before);
            continue;
        }

        // Two 3-ears: P' = a-v-w-b with v = the scanned internal, P'' =
        // c-x-y-d with y = the neighbor internal.
        ear pp = (pi.v[1] == vio->p) ? pi : pi.reversed();
        ear qq = (pj.v[2] == vio->q) ? pj : pj.reversed();
        vertex a = pp.v[0], v = pp.v[1], w = pp.v[2], b = pp.v[3];
        vertex c = qq.v[0], x = qq.v[1], y = qq.v[2], dd = qq.v[3];
        std::size_t te = detail::trivial_carrier(cur, v, y);
        std::string label;
        ear s;
        std::set<std::size_t> drop;
        std::vector<ear> appended;
        std::size_t slot = std::max(vio->i, vio->j);
        std::vector<ear> touched{pi, pj};

        if (b != c) {
            label = "N2a";
            s = ear({b, w, v, y, x, c});
            drop = {vio->i, vio->j, te};
            appended = {trivial_ear(a, v), trivial_ear(y, dd)};
        } else if (g.has_edge(x, v)) {
            label = "N2bI";
            std::size_t txv = detail::trivial_carrier(cur, x, v);
            s = ear({b, w, v, x, y, dd});
            drop = {vio->i, vio->j, txv};
            appended = {trivial_ear(a, v), trivial_ear(b, x)};
        } else if (g.has_edge(x, w)) {
            label = "N2bI";
            std::size_t txw = detail::trivial_carrier(cur, x, w);
            s = ear({a, v, y, x, w, b});
            drop = {vio->i, vio->j, te, txw};
            appended = {trivial_ear(v, w), trivial_ear(b, x), trivial_ear(y, dd)};
        } else {
            // x has a third neighbor z outside {b, y} (minimum degree 3);
            // the rewrite folds through z's home ear R.
            vertex z = -1;
            for (vertex nb : g.neighbors(x)) {
                if (nb == b || nb == y) continue;
                z = nb;
                break;
            }
            detail::require(z != -1, "minimum degree 3 guarantees a third edge at x");
            detail::require(z != v && z != w, "adjacency cases should have caught z");
            std::size_t txz = detail::trivial_carrier(cur, x, z);
            auto home = detail::internal_home(cur, z);
            bool root_home = !home.has_value();
            if (root_home) detail::require(z == cur.root, "covered vertex without a home ear");
            std::size_t r_idx = root_home ? 0 : *home;
            const ear& rr = cur.ears[r_idx];
            touched.push_back(rr);

            if (root_home || rr.is_long()) {
                label = "N2bII-long";
                s = ear({b, w, v, y, x, z});
                drop = {vio->i, vio->j, te, txz};
                appended = {trivial_ear(a, v), trivial_ear(b, x), trivial_ear(y, dd)};
                slot = std::max(slot, r_idx);  // S attaches inside R: keep it after R
            } else if (rr.length() == 2) {
                label = "N2bII-2";
                vertex er;
                {
                    vertex lo = std::min(rr.front(), rr.back()),
                           hi = std::max(rr.front(), rr.back());
                    er = (lo != b) ? lo : hi;
                    detail::require(er != b, "folded ear would close on itself");
                }
                vertex other_r = (er == rr.front()) ? rr.back() : rr.front();
                s = ear({er, z, x, y, v, w, b});
                detail::require(s.is_even(), "the 2-ear fold is the one even construction");
                drop = {vio->i, vio->j, r_idx, te, txz};
                appended = {trivial_ear(z, other_r), trivial_ear(a, v), trivial_ear(b, x),
                            trivial_ear(y, dd)};
                slot = std::max(slot, r_idx);
            } else {
                detail::require(rr.length() == 3, "home ear of z has no valid length");
                ear ro = (rr.v[2] == z) ? rr : rr.reversed();  // g2-i2-z-h2
                vertex g2 = ro.v[0], i2 = ro.v[1], h2 = ro.v[3];
                if (g2 != b) {
                    label = "N2bII-3-distinct";
                    s = ear({b, w, v, y, x, z, i2, g2});
                    drop = {vio->i, vio->j, r_idx, te, txz};
                    appended = {trivial_ear(a, v), trivial_ear(b, x), trivial_ear(y, dd),
                                trivial_ear(h2, z)};
                } else {
                    label = "N2bII-3-coincide";
                    s = ear({g2, i2, z, x, y, dd});
                    drop = {vio->j, r_idx, txz};  // P' stays
                    appended = {trivial_ear(h2, z), trivial_ear(b, x)};
                }
                slot = 0;
                for (std::size_t k : drop)
                    if (!cur.ears[k].is_trivial()) slot = std::max(slot, k);
            }
        }

        detail::require(s.is_open(), "nicify replacement ear must be open");
        // Recompute the slot as the latest involved nontrivial position.
        std::size_t place = slot;
        for (std::size_t k : drop)
            if (!cur.ears[k].is_trivial()) place = std::max(place, k);
        cur = detail::nicify_rebuild(cur, place, s, drop, appended);
        if (opt.certified)
            detail::require(cur.count_even() == evens_start,
                            "nicify changed the even count of a certified decomposition");
        post_step(label, touched, shorts_before);
    }

    detail::require(is_nice(g, cur), "nicify finished on a decomposition that is not nice");
    return cur;
}

}  // namespace earspan
