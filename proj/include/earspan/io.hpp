#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "earspan/bounds.hpp"
#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/graph.hpp"

namespace earspan {

namespace detail {

// Strip a '#' comment and surrounding whitespace; empty result means the
// line carries no data.
inline std::string strip_line(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline parse_error bad_line(int lineno, const std::string& what) {
    return parse_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace detail

// Plain edge-list format: first data line "n m", then m lines "u v" with
// 0-based vertices.  '#' starts a comment anywhere on a line.
inline graph parse_edge_list(std::istream& in) {
    std::string raw;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<edge> es;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = detail::strip_line(raw);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                throw detail::bad_line(lineno, "expected header 'n m'");
        } else {
            long u, v;
            if (!(ls >> u >> v)) throw detail::bad_line(lineno, "expected edge 'u v'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw detail::bad_line(lineno, "vertex out of range");
            if (static_cast<long>(es.size()) >= m)
                throw detail::bad_line(lineno, "more edges than the header announced");
            es.push_back(make_edge(static_cast<vertex>(u), static_cast<vertex>(v)));
        }
        std::string rest;
        if (ls >> rest) throw detail::bad_line(lineno, "trailing tokens");
    }
    if (n < 0) throw parse_error("empty input: missing 'n m' header");
    if (static_cast<long>(es.size()) != m)
        throw parse_error("expected " + std::to_string(m) + " edges, found " +
                          std::to_string(es.size()));
    return graph(static_cast<int>(n), es);
}

// DIMACS format: 'c' comment lines, one 'p edge n m' line, then 'e u v'
// lines with 1-based vertices.
inline graph parse_dimacs(std::istream& in) {
    std::string raw;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<edge> es;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = detail::strip_line(raw);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string kind;
        ls >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0) throw detail::bad_line(lineno, "duplicate problem line");
            std::string tag;
            if (!(ls >> tag >> n >> m) || tag != "edge" || n < 1 || m < 0)
                throw detail::bad_line(lineno, "expected 'p edge n m'");
        } else if (kind == "e") {
            if (n < 0) throw detail::bad_line(lineno, "edge before problem line");
            long u, v;
            if (!(ls >> u >> v)) throw detail::bad_line(lineno, "expected 'e u v'");
            if (u < 1 || v < 1 || u > n || v > n)
                throw detail::bad_line(lineno, "vertex out of range");
            if (static_cast<long>(es.size()) >= m)
                throw detail::bad_line(lineno, "more edges than the problem line announced");
            es.push_back(make_edge(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1)));
        } else {
            throw detail::bad_line(lineno, "unknown line type '" + kind + "'");
        }
        std::string rest;
        if (kind != "c" && (ls >> rest)) throw detail::bad_line(lineno, "trailing tokens");
    }
    if (n < 0) throw parse_error("missing 'p edge n m' line");
    if (static_cast<long>(es.size()) != m)
        throw parse_error("expected " + std::to_string(m) + " edges, found " +
                          std::to_string(es.size()));
    return graph(static_cast<int>(n), es);
}

inline graph parse_graph(std::istream& in, const std::string& format) {
    if (format == "edges") return parse_edge_list(in);
    if (format == "dimacs") return parse_dimacs(in);
    throw parse_error("unknown format '" + format + "' (expected 'edges' or 'dimacs')");
}

inline graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return parse_graph(in, format);
}

inline void write_edge_list(std::ostream& out, const graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_dimacs(std::ostream& out, const graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

// DOT rendering of a decomposition: each nontrivial ear gets one color from
// a cycling palette and its 1-based index as edge label, pendant short ears
// are drawn bold, trivial ears dashed gray.
inline std::string to_dot(const graph& g, const ear_decomposition& d) {
    for (const auto& e : d.ears)
        for (const auto& [u, v] : e.edges())
            detail::require(g.has_edge(u, v), "to_dot: decomposition edge missing from graph");
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#17becf"};
    constexpr int palette_size = 8;
    std::ostringstream out;
    out << "graph decomposition {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    int color_idx = 0;
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const ear& e = d.ears[i];
        if (e.is_trivial()) {
            out << "  " << e.front() << " -- " << e.back()
                << " [style=dashed, color=\"gray50\"];\n";
            continue;
        }
        const char* color = palette[color_idx % palette_size];
        ++color_idx;
        bool bold = counts_as_pendant_open(d, i) && e.is_short();
        for (const auto& [u, v] : e.edges()) {
            out << "  " << u << " -- " << v << " [color=\"" << color << "\", label=\""
                << (i + 1) << "\"";
            if (bold) out << ", penwidth=2.0";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

// JSON report with a pinned key order so identical runs serialize to
// identical bytes.
inline nlohmann::ordered_json make_report(const bounds_summary& s, bool phi_certified,
                                          const std::vector<edge>& output_edges,
                                          std::optional<long> opt = std::nullopt,
                                          std::optional<double> ratio = std::nullopt,
                                          std::optional<std::string> trace_path = std::nullopt) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["phi"] = s.evens;
    j["phi_certified"] = phi_certified;
    j["pi"] = s.pi;
    j["pi3"] = s.pi3;
    j["m_size"] = s.m_size;
    j["mu"] = s.mu ? nlohmann::ordered_json(*s.mu) : nlohmann::ordered_json(nullptr);
    j["v_i"] = s.v_i;
    j["v_d"] = s.v_d;
    j["v_m"] = s.v_m;
    j["l_phi"] = s.l_phi;
    j["l_mu"] = s.l_mu ? nlohmann::ordered_json(*s.l_mu) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json edges_json = nlohmann::ordered_json::array();
    for (const auto& [u, v] : output_edges) edges_json.push_back({u, v});
    j["output_edges"] = edges_json;
    j["opt"] = opt ? nlohmann::ordered_json(*opt) : nlohmann::ordered_json(nullptr);
    j["ratio"] = ratio ? nlohmann::ordered_json(*ratio) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json claims;
    claims["c1_ok"] = s.c1_ok;
    claims["c2_ok"] = s.c2_ok;
    claims["lemma3_ok"] =
        s.lemma3_ok ? nlohmann::ordered_json(*s.lemma3_ok) : nlohmann::ordered_json(nullptr);
    j["claims"] = claims;
    j["trace_path"] =
        trace_path ? nlohmann::ordered_json(*trace_path) : nlohmann::ordered_json(nullptr);
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << content;
}

}  // namespace earspan
