#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"
#include "earspan/trace.hpp"

namespace earspan {

// Bookkeeping for the Case-3c rerouting walk. F_old holds the positions of
// the ears the walk split; F_new1 their halves absorbed into the new long
// ear; F_new0 the halves that replace the split ears in place. t is the
// walk cursor; x_mask marks the vertices covered strictly before the
// processed ear (root included).
struct reroute_context {
    std::vector<std::size_t> f_old;
    std::vector<ear> f_new1;
    std::vector<ear> f_new0;
    vertex t = -1;
    std::vector<char> x_mask;
};

namespace detail {

// Trivial ears can lose prefix-coverage of an endpoint when a rewrite moves
// that vertex's covering ear later; stably deferring them to the tail (where
// everything is covered) restores validity without touching anything else.
inline void move_premature_trivials_to_tail(ear_decomposition& d) {
    std::set<vertex> covered;
    covered.insert(d.root);
    std::vector<ear> kept, deferred;
    for (auto& e : d.ears) {
        if (e.is_trivial() && (!covered.count(e.front()) || !covered.count(e.back()))) {
            deferred.push_back(e);
            continue;
        }
        for (vertex x : e.v) covered.insert(x);
        kept.push_back(std::move(e));
    }
    kept.insert(kept.end(), deferred.begin(), deferred.end());
    d.ears = std::move(kept);
}

inline std::optional<std::size_t> first_attaching_nontrivial(const ear_decomposition& d,
                                                             std::size_t p) {
    const ear& target = d.ears[p];
    for (std::size_t j = 0; j < d.ears.size(); ++j) {
        if (j == p || d.ears[j].is_trivial()) continue;
        if (target.has_internal(d.ears[j].front()) || target.has_internal(d.ears[j].back()))
            return j;
    }
    return std::nullopt;
}

// The unique nontrivial ear containing x internally (the root is internal
// to none).
inline std::optional<std::size_t> internal_home(const ear_decomposition& d, vertex x) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < d.ears.size(); ++j) {
        if (d.ears[j].is_trivial() || !d.ears[j].has_internal(x)) continue;
        require(!found.has_value(), "vertex internal to two nontrivial ears");
        found = j;
    }
    return found;
}

inline ear_decomposition rebuild(const ear_decomposition& d, std::size_t p, const ear& pprime,
                                 const std::set<std::size_t>& drop,
                                 const std::map<std::size_t, ear>& replace_inplace,
                                 const std::vector<ear>& appended) {
    ear_decomposition out;
    out.root = d.root;
    out.ears.reserve(d.ears.size());
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        if (i == p) {
            out.ears.push_back(pprime);
            continue;
        }
        if (drop.count(i)) continue;
        auto it = replace_inplace.find(i);
        out.ears.push_back(it != replace_inplace.end() ? it->second : d.ears[i]);
    }
    for (const auto& e : appended) out.ears.push_back(e);
    move_premature_trivials_to_tail(out);
    return out;
}

// Concatenate: `base` ends where `next` has an endpoint; append the rest of
// `next` oriented away from that junction.
inline void chain_append(std::vector<vertex>& base, const ear& next) {
    ear o = next.oriented_from(base.back());
    base.insert(base.end(), o.v.begin() + 1, o.v.end());
}

}  // namespace detail

// Splits a nontrivial ear at an internal vertex t into two sub-ears meeting
// at t. The first half returned (s1) is the one a rerouting walk absorbs;
// when the ear is odd the halves are ordered so that s1 is even and s0 odd.
inline std::pair<ear, ear> split_ear_at(const ear& s, vertex t) {
    if (!s.has_internal(t)) throw precondition_violated("split_ear_at: t is not internal");
    auto it = std::find(s.v.begin() + 1, s.v.end() - 1, t);
    ear s1(std::vector<vertex>(s.v.begin(), it + 1));
    ear s0(std::vector<vertex>(it, s.v.end()));
    if (!s.is_even() && !s1.is_even()) std::swap(s1, s0);
    detail::require(!s0.is_even() || s.is_even(), "split halves: even s0 can only come from an even ear");
    detail::require(s1.is_even() || (!s0.is_even() && s.is_even()),
                    "split halves: odd s1 forces an even ear with an odd s0");
    return {s1, s0};
}

// Merges a short ear P with the first nontrivial ear Q attaching at one of
// its internal vertices: P is traversed from its far end up to the
// attachment vertex w, then continues along Q; the bypassed last edge of P
// becomes a trivial ear. The merged ear takes Q's position (its interior
// is only covered there); P's slot disappears.
inline ear_decomposition lemma1_rotate(const ear_decomposition& d, std::size_t p, std::size_t q) {
    if (p >= d.ears.size() || q >= d.ears.size() || p == q)
        throw precondition_violated("lemma1_rotate: bad ear indices");
    const ear& P = d.ears[p];
    const ear& Q = d.ears[q];
    if (P.is_trivial() || Q.is_trivial())
        throw precondition_violated("lemma1_rotate: both ears must be nontrivial");
    if (!P.is_open()) throw precondition_violated("lemma1_rotate: P must be open");

    auto first = detail::first_attaching_nontrivial(d, p);
    if (!first || *first != q)
        throw precondition_violated("lemma1_rotate: q is not the first nontrivial ear attaching inside P");

    bool front_in = P.has_internal(Q.front());
    bool back_in = P.has_internal(Q.back());
    if (front_in == back_in)
        throw precondition_violated("lemma1_rotate: exactly one endpoint of Q must be internal to P");
    vertex w = front_in ? Q.front() : Q.back();
    vertex far_q = front_in ? Q.back() : Q.front();

    // Endpoints of P adjacent to w along P.
    auto pos = std::find(P.v.begin(), P.v.end(), w);
    std::size_t wi = static_cast<std::size_t>(pos - P.v.begin());
    std::vector<vertex> cands;
    if (wi == 1) cands.push_back(P.front());
    if (wi + 2 == P.v.size()) cands.push_back(P.back());
    if (cands.empty())
        throw precondition_violated("lemma1_rotate: attachment vertex not adjacent to an endpoint of P");
    // Keep the merged ear open: prefer dropping the endpoint whose opposite
    // end differs from Q's far endpoint; prefer the back end on a tie.
    vertex y = -1;
    for (auto it2 = cands.rbegin(); it2 != cands.rend(); ++it2) {
        vertex other = (*it2 == P.front()) ? P.back() : P.front();
        if (other != far_q) {
            y = *it2;
            break;
        }
    }
    if (y == -1) throw precondition_violated("lemma1_rotate: rotation would close the ear");
    vertex keep_end = (y == P.front()) ? P.back() : P.front();

    std::vector<vertex> seq = P.oriented_from(keep_end).v;  // keep_end .. w .. y
    while (seq.back() != w) seq.pop_back();
    detail::chain_append(seq, Q);
    ear merged(seq);
    detail::require(merged.is_open(), "lemma1_rotate: merged ear is closed");
    detail::require(merged.length() == P.length() + Q.length() - 1,
                    "lemma1_rotate: merged ear has the wrong length");

    std::set<std::size_t> drop{p};
    std::map<std::size_t, ear> none;
    ear_decomposition out = detail::rebuild(d, q, merged, drop, none, {trivial_ear(w, y)});
    return out;
}

// If the first (closed) ear is a triangle, widen it: the first nontrivial
// ear after it is folded through two of the triangle's edges, and the edge
// between that ear's endpoints becomes trivial. Needs at least 4 vertices.
inline ear_decomposition fix_closed_short_first_ear(const graph& g, const ear_decomposition& d) {
    if (g.n() < 4) throw precondition_violated("fix_closed_short_first_ear: needs at least 4 vertices");
    {
        auto viol = validate(g, d);
        if (!viol.empty())
            throw precondition_violated("fix_closed_short_first_ear: invalid decomposition: " + viol[0]);
        if (!is_open_decomposition(d))
            throw precondition_violated("fix_closed_short_first_ear: decomposition is not open");
    }
    if (d.ears[0].length() != 3) return d;

    std::size_t p2 = 0;
    for (std::size_t j = 1; j < d.ears.size(); ++j)
        if (d.ears[j].is_nontrivial()) {
            p2 = j;
            break;
        }
    detail::require(p2 != 0, "triangle first ear with no nontrivial successor");
    const ear& q = d.ears[p2];
    vertex u = q.front(), v = q.back();

    // Third vertex of the triangle (u and v both lie on it: its internal
    // vertices are fresh, so the second ear's endpoints are triangle
    // vertices).
    const ear& tri = d.ears[0];
    vertex w = -1;
    for (std::size_t i = 0; i + 1 < tri.v.size(); ++i)
        if (tri.v[i] != u && tri.v[i] != v) w = tri.v[i];
    detail::require(w != -1, "triangle has no third vertex");
    detail::require(tri.contains_edge(u, w) && tri.contains_edge(w, v) && tri.contains_edge(u, v),
                    "first nontrivial ear does not span the triangle");

    std::vector<vertex> seq{u, w, v};
    detail::chain_append(seq, q);  // continue v .. u along the second ear
    ear closed(seq);
    detail::require(closed.is_closed() && closed.is_long(), "widened first ear is not a long cycle");
    // Rotate so the cycle starts and ends at the root.
    std::vector<vertex> rot(closed.v.begin(), closed.v.end() - 1);
    auto at = std::find(rot.begin(), rot.end(), d.root);
    detail::require(at != rot.end(), "root fell off the first ear");
    std::rotate(rot.begin(), at, rot.end());
    rot.push_back(d.root);
    ear first(rot);

    std::set<std::size_t> drop{p2};
    std::map<std::size_t, ear> none;
    ear_decomposition out = detail::rebuild(d, 0, first, drop, none, {trivial_ear(u, v)});
    detail::require(out.count_even() == d.count_even(),
                    "widening the first ear changed the even count");
    {
        auto viol = validate(g, out);
        detail::require(viol.empty(), "widening the first ear broke validity");
    }
    return out;
}

namespace detail {

// Orientation of a 3-ear around a chosen internal vertex: P = x-v-y-z with
// v the chosen internal.
struct three_ear_frame {
    vertex x, v, y, z;
};

inline three_ear_frame orient_3ear(const ear& p, vertex chosen_internal) {
    require(p.length() == 3, "orienting a non-3-ear");
    if (p.v[1] == chosen_internal) return {p.v[0], p.v[1], p.v[2], p.v[3]};
    require(p.v[2] == chosen_internal, "chosen vertex is not internal to the 3-ear");
    return {p.v[3], p.v[2], p.v[1], p.v[0]};
}

}  // namespace detail

// Case-3c rerouting: the processed 3-ear P (index p, frame x-v-y-z with v
// the internal owning the outside edge) is replaced by a long ear built
// from the edge chain leaving v through ear r and the absorbed halves of
// every ear the walk splits; each split ear is replaced in place by its
// other half. Returns the rewritten decomposition; the final walk context
// and the terminal subcase label are reported through the out-parameters.
inline ear_decomposition case3c_reroute(const graph& g, const ear_decomposition& d, std::size_t p,
                                        std::size_t r, vertex u, vertex v,
                                        reroute_context* ctx_out = nullptr,
                                        std::string* terminal_out = nullptr) {
    if (p >= d.ears.size() || r >= d.ears.size() || p == r)
        throw precondition_violated("case3c_reroute: bad ear indices");
    const ear& P = d.ears[p];
    if (P.length() != 3 || !P.is_open())
        throw precondition_violated("case3c_reroute: P must be an open 3-ear");
    if (!P.has_internal(v)) throw precondition_violated("case3c_reroute: v must be internal to P");
    detail::three_ear_frame f = detail::orient_3ear(P, v);
    if (!g.has_edge(u, v)) throw precondition_violated("case3c_reroute: uv is not an edge");
    if (!d.ears[r].contains_edge(u, v))
        throw precondition_violated("case3c_reroute: ear r does not carry the edge uv");
    if (u == f.y) throw precondition_violated("case3c_reroute: u must avoid the other internal");

    reroute_context ctx;
    ctx.x_mask = covered_before(d, p, g.n());
    if (ctx.x_mask[static_cast<std::size_t>(u)])
        throw precondition_violated("case3c_reroute: u must be uncovered before P");

    // The first nontrivial ear attaching inside P must hit y and return to x
    // (otherwise an earlier case applies).
    std::size_t q_idx = 0;
    {
        auto first = detail::first_attaching_nontrivial(d, p);
        if (!first) throw precondition_violated("case3c_reroute: P is pendant");
        q_idx = *first;
        const ear& q = d.ears[q_idx];
        bool at_y = (q.front() == f.y) != (q.back() == f.y);
        vertex far = (q.front() == f.y) ? q.back() : q.front();
        if (!at_y || far != f.x)
            throw precondition_violated("case3c_reroute: attachment shape is not the rerouting case");
    }

    std::size_t r_idx = r;
    auto far_of = [&](std::size_t idx) -> vertex {
        const ear& e = d.ears[idx];
        if (e.is_trivial()) return e.front() == v ? e.back() : e.front();
        detail::require(e.has_endpoint(v), "chain ear does not end at v");
        return e.oriented_from(v).back();
    };
    detail::require(r_idx > p, "chain ear precedes the processed ear");
    ctx.t = far_of(r_idx);

    auto stopped = [&](vertex t) {
        return t == v || t == f.y || ctx.x_mask[static_cast<std::size_t>(t)];
    };

    int steps = 0;
    const int cap = 4 * g.n() * g.n() + 16;
    while (!stopped(ctx.t)) {
        detail::require(++steps <= cap, "rerouting walk exceeded its step cap");
        auto home = detail::internal_home(d, ctx.t);
        detail::require(home.has_value(), "walk cursor has no containing ear");
        std::size_t s_idx = *home;
        detail::require(s_idx > p, "walk split an ear placed before the processed one");
        detail::require(s_idx < r_idx, "walk split an ear at or after the chain start");
        detail::require(ctx.f_old.empty() || s_idx < ctx.f_old.back(),
                        "walk split positions must strictly decrease");
        auto [s1, s0] = split_ear_at(d.ears[s_idx], ctx.t);
        vertex next = (s1.front() == ctx.t) ? s1.back() : s1.front();
        ctx.f_old.push_back(s_idx);
        ctx.f_new1.push_back(s1);
        ctx.f_new0.push_back(s0);
        ctx.t = next;
    }

    std::string terminal;
    if (ctx.t == v) {
        // The chain closed back on v: restart it along the ear that brought
        // it there, which sits strictly earlier than the previous chain
        // start. Discard the split bookkeeping gathered so far.
        detail::require(!ctx.f_old.empty(), "chain returned to v without splitting anything");
        std::size_t new_r = ctx.f_old.back();
        detail::require(new_r < r_idx, "restarted chain does not move backwards");
        const ear& s = d.ears[new_r];
        detail::require(s.has_endpoint(v), "restart ear does not end at v");
        ctx.f_old.clear();
        ctx.f_new1.clear();
        ctx.f_new0.clear();
        return case3c_reroute(g, d, p, new_r, s.oriented_from(v).v[1], v, ctx_out, terminal_out);
    }

    // Assemble the chain v -> (ear r) -> absorbed halves -> ctx.t.
    std::vector<vertex> chain{v};
    detail::chain_append(chain, d.ears[r_idx]);
    for (const auto& h : ctx.f_new1) detail::chain_append(chain, h);
    detail::require(chain.back() == ctx.t, "chain does not end at the walk cursor");

    ear pprime;
    std::vector<ear> appended;
    std::set<std::size_t> drop{r_idx};
    if (ctx.t == f.y) {
        terminal = "P3-3c-iii";
        std::vector<vertex> seq{f.x};
        seq.insert(seq.end(), chain.begin(), chain.end());
        seq.push_back(f.z);
        pprime = ear(seq);
        appended = {trivial_ear(f.v, f.y)};
    } else if (ctx.t == f.z) {
        terminal = "P3-3c-iv";
        detail::require(std::find(ctx.f_old.begin(), ctx.f_old.end(), q_idx) == ctx.f_old.end(),
                        "chain split the returning ear it must absorb whole");
        std::vector<vertex> seq = d.ears[q_idx].oriented_from(f.x).v;  // x .. y
        seq.insert(seq.end(), chain.begin(), chain.end());             // y-v edge, then chain
        pprime = ear(seq);
        drop.insert(q_idx);
        appended = {trivial_ear(f.x, f.v), trivial_ear(f.y, f.z)};
    } else {
        terminal = "P3-3c-i";
        std::vector<vertex> seq{f.z, f.y};
        seq.insert(seq.end(), chain.begin(), chain.end());
        pprime = ear(seq);
        appended = {trivial_ear(f.x, f.v)};
    }
    detail::require(pprime.is_open() && pprime.is_long(), "rerouted ear must be open and long");

    std::map<std::size_t, ear> inplace;
    for (std::size_t i = 0; i < ctx.f_old.size(); ++i) inplace.emplace(ctx.f_old[i], ctx.f_new0[i]);
    ear_decomposition out = detail::rebuild(d, p, pprime, drop, inplace, appended);
    {
        auto viol = validate(g, out);
        detail::require(viol.empty(), "rerouting broke validity: " + (viol.empty() ? "" : viol[0]));
    }
    if (ctx_out) *ctx_out = ctx;
    if (terminal_out) *terminal_out = terminal;
    return out;
}

namespace detail {

struct case_result {
    ear_decomposition d;
    std::string label;
    std::vector<ear> touched;
};

// Case 1: some nontrivial ear runs between the two internals of P.
inline std::optional<case_result> try_case1(const graph& g, const ear_decomposition& d,
                                            std::size_t p) {
    const ear& P = d.ears[p];
    vertex b = P.v[1], c = P.v[2];
    for (std::size_t j = 0; j < d.ears.size(); ++j) {
        if (j == p || d.ears[j].is_trivial()) continue;
        const ear& q = d.ears[j];
        if (!((q.front() == b && q.back() == c) || (q.front() == c && q.back() == b))) continue;
        std::vector<vertex> seq{P.v[0], b};
        chain_append(seq, q);  // b .. c
        seq.push_back(P.v[3]);
        ear merged(seq);
        require(merged.is_open(), "case 1 produced a closed ear");
        ear_decomposition out =
            rebuild(d, p, merged, {j}, {}, {trivial_ear(b, c)});
        auto viol = validate(g, out);
        require(viol.empty(), "case 1 broke validity");
        return case_result{std::move(out), "P3-1", {P, q}};
    }
    return std::nullopt;
}

// Case 2: ears A (endpoints x,y) and B (endpoints v,z) exist with at least
// one nontrivial; P's middle edge splices them into one ear.
inline std::optional<case_result> try_case2(const graph& g, const ear_decomposition& d,
                                            std::size_t p) {
    const ear& P = d.ears[p];
    vertex x = P.v[0], v = P.v[1], y = P.v[2], z = P.v[3];
    auto find_between = [&](vertex a, vertex b) -> std::optional<std::size_t> {
        std::optional<std::size_t> triv;
        for (std::size_t j = 0; j < d.ears.size(); ++j) {
            if (j == p) continue;
            const ear& e = d.ears[j];
            if (!((e.front() == a && e.back() == b) || (e.front() == b && e.back() == a))) continue;
            if (e.is_nontrivial()) return j;
            if (!triv) triv = j;
        }
        return triv;
    };
    auto ja = find_between(x, y);
    auto jb = find_between(v, z);
    if (!ja || !jb) return std::nullopt;
    if (d.ears[*ja].is_trivial() && d.ears[*jb].is_trivial()) return std::nullopt;
    require(*ja != *jb, "case 2 found one ear twice");
    std::vector<vertex> seq = d.ears[*ja].oriented_from(x).v;  // x .. y
    seq.push_back(v);                                          // edge y-v
    chain_append(seq, d.ears[*jb]);                            // v .. z
    ear merged(seq);
    require(merged.is_open(), "case 2 produced a closed ear");
    ear_decomposition out = rebuild(d, p, merged, {*ja, *jb}, {},
                                    {trivial_ear(x, v), trivial_ear(y, z)});
    auto viol = validate(g, out);
    require(viol.empty(), "case 2 broke validity");
    return case_result{std::move(out), "P3-2", {P, d.ears[*ja], d.ears[*jb]}};
}

// Case 3b: a trivial edge leaves v to an already-covered vertex u; fold P
// around it. The construction depends on the ear holding u internally.
inline std::optional<case_result> try_case3b(const graph& g, const ear_decomposition& d,
                                             std::size_t p, const three_ear_frame& f,
                                             std::size_t q_idx, const std::vector<char>& x_mask) {
    std::optional<std::size_t> tuv;
    vertex u = -1;
    for (std::size_t j = 0; j < d.ears.size() && !tuv; ++j) {
        if (!d.ears[j].is_trivial()) continue;
        vertex a = d.ears[j].front(), b = d.ears[j].back();
        if (a == f.v && x_mask[static_cast<std::size_t>(b)]) {
            tuv = j;
            u = b;
        } else if (b == f.v && x_mask[static_cast<std::size_t>(a)]) {
            tuv = j;
            u = a;
        }
    }
    if (!tuv) return std::nullopt;

    const ear& q = d.ears[q_idx];
    std::optional<std::size_t> r_idx = internal_home(d, u);  // absent iff u is the root
    require(r_idx.has_value() == (u != d.root), "covered vertex without a home ear");

    ear_decomposition out;
    std::string label;
    std::vector<ear> touched;
    if (!r_idx || d.ears[*r_idx].is_long()) {
        // Absorb Q and the trivial edge; R (if any) is long and untouched.
        if (!r_idx) require(d.ears[0].is_long(), "root branch needs a long first ear");
        std::vector<vertex> seq = q.oriented_from(f.x).v;  // x .. y
        seq.push_back(f.v);
        seq.push_back(u);
        ear merged(seq);
        require(merged.is_open() && merged.is_long(), "case 3b merge must stay open and long");
        out = rebuild(d, p, merged, {q_idx, *tuv}, {},
                      {trivial_ear(f.x, f.v), trivial_ear(f.y, f.z)});
        label = "P3-3b-long";
        touched = {d.ears[p], q, d.ears[*tuv]};
    } else {
        const ear& rr = d.ears[*r_idx];
        require(*r_idx < p, "short home ear should precede the processed ear");
        require(classify_pendant(d, *r_idx), "short home ear should already be pendant");
        if (rr.length() == 2) {
            vertex a = (rr.front() == f.z) ? rr.back()
                       : (rr.back() == f.z) ? rr.front()
                                            : std::min(rr.front(), rr.back());
            vertex other = (a == rr.front()) ? rr.back() : rr.front();
            ear merged({a, u, f.v, f.y, f.z});
            require(merged.is_open() && merged.is_long(), "case 3b merge must stay open and long");
            out = rebuild(d, p, merged, {*r_idx, *tuv}, {},
                          {trivial_ear(u, other), trivial_ear(f.x, f.v)});
            label = "P3-3b-2";
            touched = {d.ears[p], rr, d.ears[*tuv]};
        } else {
            require(rr.length() == 3, "home ear of a covered vertex has no valid length");
            three_ear_frame rf = orient_3ear(rr, u);  // rf.v == u
            // Absorb the two-edge half z-y-u of R; the one-edge half u-x
            // becomes trivial.
            vertex a = rf.z, b2 = rf.y;
            if (a != f.x) {
                std::vector<vertex> seq{a, b2, u, f.v, f.y};
                chain_append(seq, q);  // y .. x
                ear merged(seq);
                require(merged.is_open() && merged.is_long(),
                        "case 3b merge must stay open and long");
                out = rebuild(d, p, merged, {*r_idx, q_idx, *tuv}, {},
                              {trivial_ear(u, rf.x), trivial_ear(f.x, f.v), trivial_ear(f.y, f.z)});
            } else {
                ear merged({a, b2, u, f.v, f.y, f.z});
                require(merged.is_open() && merged.is_long(),
                        "case 3b merge must stay open and long");
                out = rebuild(d, p, merged, {*r_idx, *tuv}, {},
                              {trivial_ear(u, rf.x), trivial_ear(f.x, f.v)});
            }
            label = "P3-3b-3";
            touched = {d.ears[p], rr, d.ears[*tuv]};
        }
    }
    auto viol = validate(g, out);
    require(viol.empty(), "case 3b broke validity");
    return case_result{std::move(out), label, std::move(touched)};
}

}  // namespace detail

struct pendantize_options {
    bool certified = false;     // evens provably minimal: assert preservation
    trace_log* trace = nullptr;
};

// Rewrites an open ear decomposition until every short ear is pendant.
// Non-pendant 2-ears are merged away first; then the first non-pendant
// 3-ear is dispatched through the case analysis until none remains. Needs
// minimum degree 3 (Case 3c leans on a third edge at each internal vertex).
inline ear_decomposition pendantize(const graph& g, const ear_decomposition& d,
                                    pendantize_options opt = {}) {
    if (g.min_degree() < 3)
        throw precondition_violated("pendantize: minimum degree 3 required");
    if (!g.is_two_vertex_connected())
        throw precondition_violated("pendantize: input graph is not 2-vertex-connected");
    {
        auto viol = validate(g, d);
        if (!viol.empty()) throw precondition_violated("pendantize: invalid decomposition: " + viol[0]);
        if (!is_open_decomposition(d))
            throw precondition_violated("pendantize: decomposition is not open");
    }

    ear_decomposition cur = fix_closed_short_first_ear(g, d);
    const int evens_target = cur.count_even();
    if (opt.trace && cur.ears != d.ears)
        opt.trace->step("pendantize", 0, "closed-fix", {d.ears[0], d.ears[1]}, evens_target);

    auto post_step = [&](int iter, const std::string& label, const std::vector<ear>& touched) {
        auto viol = validate(g, cur);
        detail::require(viol.empty(), "pendantize step broke validity: " + (viol.empty() ? "" : viol[0]));
        if (opt.certified)
            detail::require(cur.count_even() == evens_target,
                            "pendantize changed the even count of a certified decomposition");
        if (opt.trace) opt.trace->step("pendantize", iter, label, touched, cur.count_even());
    };

    auto count_nonpendant_2ears = [&]() {
        int c = 0;
        for (std::size_t i = 0; i < cur.ears.size(); ++i)
            if (cur.ears[i].length() == 2 && !classify_pendant(cur, i)) ++c;
        return c;
    };

    int iter = 0;
    const long cap = 16L * (g.n() + g.m()) * (g.n() + g.m()) + 256;
    while (true) {
        detail::require(++iter <= cap, "pendantize exceeded its iteration cap");

        std::optional<std::size_t> p2;
        for (std::size_t i = 0; i < cur.ears.size() && !p2; ++i)
            if (cur.ears[i].length() == 2 && !classify_pendant(cur, i)) p2 = i;
        if (p2) {
            int before = count_nonpendant_2ears();
            auto q = detail::first_attaching_nontrivial(cur, *p2);
            detail::require(q.has_value(), "non-pendant ear with no attaching ear");
            std::vector<ear> touched{cur.ears[*p2], cur.ears[*q]};
            cur = lemma1_rotate(cur, *p2, *q);
            post_step(iter, "P2", touched);
            detail::require(count_nonpendant_2ears() < before,
                            "merging a 2-ear did not reduce the non-pendant 2-ear count");
            continue;
        }

        std::optional<std::size_t> p3;
        for (std::size_t i = 0; i < cur.ears.size() && !p3; ++i)
            if (cur.ears[i].length() == 3 && cur.ears[i].is_open() && !classify_pendant(cur, i))
                p3 = i;
        if (!p3) break;
        std::size_t p = *p3;

        if (auto res = detail::try_case1(g, cur, p)) {
            cur = std::move(res->d);
            post_step(iter, res->label, res->touched);
            continue;
        }
        if (auto res = detail::try_case2(g, cur, p)) {
            cur = std::move(res->d);
            post_step(iter, res->label, res->touched);
            continue;
        }

        auto q = detail::first_attaching_nontrivial(cur, p);
        detail::require(q.has_value(), "non-pendant 3-ear with no attaching ear");
        const ear& qe = cur.ears[*q];
        bool front_in = cur.ears[p].has_internal(qe.front());
        bool back_in = cur.ears[p].has_internal(qe.back());
        detail::require(front_in != back_in, "both endpoints inside P should have hit case 1");
        vertex attach = front_in ? qe.front() : qe.back();
        vertex far = front_in ? qe.back() : qe.front();
        // Frame x-v-y-z around the free internal v: the attaching ear meets
        // P at the other internal, named y.
        vertex free_internal =
            (attach == cur.ears[p].v[1]) ? cur.ears[p].v[2] : cur.ears[p].v[1];
        detail::three_ear_frame f = detail::orient_3ear(cur.ears[p], free_internal);
        detail::require(f.y == attach, "frame orientation lost the attachment vertex");

        if (far != f.x) {
            std::vector<ear> touched{cur.ears[p], qe};
            cur = lemma1_rotate(cur, p, *q);
            post_step(iter, "P3-3a", touched);
            continue;
        }

        std::vector<char> x_mask = covered_before(cur, p, g.n());
        if (auto res = detail::try_case3b(g, cur, p, f, *q, x_mask)) {
            cur = std::move(res->d);
            post_step(iter, res->label, res->touched);
            continue;
        }

        // Case 3c: pick the lowest neighbor of v that is neither covered
        // before P nor the other internal; the ear carrying that edge seeds
        // the rerouting chain.
        vertex u = -1;
        for (vertex nb : g.neighbors(f.v)) {
            if (nb == f.y || x_mask[static_cast<std::size_t>(nb)]) continue;
            u = nb;
            break;
        }
        detail::require(u != -1, "minimum degree 3 guarantees an outside edge at v");
        std::optional<std::size_t> r_idx;
        for (std::size_t j = 0; j < cur.ears.size() && !r_idx; ++j)
            if (j != p && cur.ears[j].contains_edge(u, f.v)) r_idx = j;
        detail::require(r_idx.has_value(), "edge uv has no carrying ear");
        std::vector<ear> touched{cur.ears[p], cur.ears[*r_idx]};
        std::string label;
        cur = case3c_reroute(g, cur, p, *r_idx, u, f.v, nullptr, &label);
        post_step(iter, label, touched);
    }

    for (std::size_t i = 0; i < cur.ears.size(); ++i)
        if (cur.ears[i].is_nontrivial() && cur.ears[i].is_short() && cur.ears[i].is_open())
            detail::require(classify_pendant(cur, i), "a short ear survived non-pendant");
    return cur;
}

}  // namespace earspan
