#pragma once

#include <optional>
#include <string>
#include <vector>

#include "earspan/bounds.hpp"
#include "earspan/decompose.hpp"
#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/evenmin.hpp"
#include "earspan/graph.hpp"
#include "earspan/nicify.hpp"
#include "earspan/oracle.hpp"
#include "earspan/pendantize.hpp"
#include "earspan/trace.hpp"

namespace earspan {

struct solve_options {
    int phi_guard = 16;       // max edges for certified even-ear minimization
    int earmuff_guard = 8;    // max eardrum components for the exact earmuff
    bool with_oracle = false;  // also compute the exact optimum
    int oracle_guard = 20;    // max edges for the exact optimum search
    trace_log* trace = nullptr;
};

struct solve_result {
    ear_decomposition decomposition;  // final nice decomposition
    std::vector<edge> h_edges;        // edges of all nontrivial ears
    graph h;                          // the output subgraph
    bool phi_certified = false;       // evens of the output provably minimal
    bounds_summary analysis;
    std::optional<long> opt;
    std::optional<double> ratio;
};

// Full approximation pipeline: open ear decomposition, even-ear
// minimization (certified within the guard), pendantization, nicification;
// the output keeps exactly the nontrivial ears.  When the even-ear count is
// certified minimal, the output is within 17/12 of optimal.
inline solve_result approximate_2vcss(const graph& g, const solve_options& options = {}) {
    if (!g.is_two_vertex_connected())
        throw not_two_connected("approximate_2vcss: input is not 2-vertex-connected");
    if (g.min_degree() < 3)
        throw min_degree_too_low("approximate_2vcss: minimum degree 3 required, found " +
                                 std::to_string(g.min_degree()));

    ear_decomposition d = build_open_decomposition(g);
    if (options.trace) options.trace->snapshot("decompose", d);

    evenmin_result em = minimize_even_ears(g, d, options.phi_guard);
    d = em.d;
    if (options.trace) options.trace->evenmin(em.certified, d.count_even(), d);
    const int certified_evens = d.count_even();

    d = pendantize(g, d, {em.certified, options.trace});
    d = nicify(g, d, {em.certified, options.trace});
    if (options.trace) options.trace->snapshot("result", d);

    solve_result out;
    out.decomposition = d;
    out.phi_certified = em.certified;
    if (em.certified)
        detail::require(d.count_even() == certified_evens,
                        "rewrites changed a certified even-ear count");
    out.h_edges = nontrivial_edges(d);
    out.h = edge_subgraph(g, out.h_edges);
    detail::require(out.h.is_two_vertex_connected(),
                    "output subgraph must be 2-vertex-connected and spanning");
    out.analysis = analyze(g, d, options.earmuff_guard);

    if (options.with_oracle) {
        opt_result opt = opt_2vcss_bruteforce(g, options.oracle_guard);
        out.opt = opt.opt;
        out.ratio = static_cast<double>(out.h_edges.size()) / static_cast<double>(opt.opt);
    }
    return out;
}

}  // namespace earspan
