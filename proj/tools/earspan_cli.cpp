// Command-line frontend: solve / gen / gadget / oracle.
//
// Exit codes: 0 success, 1 infeasible input (not 2-vertex-connected, degree
// too low, or over a brute-force guard), 2 parse or usage error, 3 internal
// invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "earspan/earspan.hpp"

namespace {

long need_int(const std::vector<std::string>& params, std::size_t i, const char* what) {
    if (i >= params.size())
        throw earspan::generation_failed(std::string("missing parameter: ") + what);
    try {
        std::size_t pos = 0;
        long v = std::stol(params[i], &pos);
        if (pos != params[i].size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw earspan::generation_failed("parameter '" + params[i] + "' is not an integer");
    }
}

earspan::graph gen_dispatch(const std::string& kind, const std::vector<std::string>& params,
                            std::uint64_t seed) {
    if (kind == "regular3")
        return earspan::gen_regular3(static_cast<int>(need_int(params, 0, "vertex count")), seed);
    if (kind == "wheel")
        return earspan::gen_wheel(static_cast<int>(need_int(params, 0, "rim size")));
    if (kind == "hypercube")
        return earspan::gen_hypercube(static_cast<int>(need_int(params, 0, "dimension")));
    if (kind == "cycle")
        return earspan::gen_cycle(static_cast<int>(need_int(params, 0, "vertex count")));
    if (kind == "named") {
        if (params.empty()) throw earspan::generation_failed("missing graph name");
        return earspan::gen_named(params[0]);
    }
    if (kind == "gadget_lift") {
        if (params.empty()) throw earspan::generation_failed("missing base generator kind");
        std::vector<std::string> rest(params.begin() + 1, params.end());
        return earspan::gen_gadget_lift(gen_dispatch(params[0], rest, seed));
    }
    throw earspan::generation_failed("unknown generator kind: " + kind);
}

void write_file_or_die(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw earspan::parse_error("cannot open file for writing: " + path);
    out << content;
}

int run_solve(const std::string& file, const std::string& format, bool with_oracle,
              bool check_claims_flag, const std::string& dot_path, const std::string& report_path,
              const std::string& trace_path) {
    earspan::graph g = earspan::load_graph(file, format);
    earspan::trace_log tl =
        trace_path.empty() ? earspan::trace_log::off() : earspan::trace_log::on();
    earspan::solve_options so;
    so.with_oracle = with_oracle;
    so.trace = &tl;
    earspan::solve_result res = earspan::approximate_2vcss(g, so);

    if (!trace_path.empty()) write_file_or_die(trace_path, tl.dump());
    if (!dot_path.empty()) write_file_or_die(dot_path, earspan::to_dot(g, res.decomposition));
    if (!report_path.empty()) {
        auto rep = earspan::make_report(
            res.analysis, res.phi_certified, res.h_edges, res.opt, res.ratio,
            trace_path.empty() ? std::nullopt : std::optional<std::string>(trace_path));
        write_file_or_die(report_path, rep.dump(2) + "\n");
    }

    const auto& a = res.analysis;
    std::cout << "n=" << a.n << " m=" << a.m << " output_edges=" << res.h_edges.size() << "\n";
    std::cout << "phi=" << a.evens << (res.phi_certified ? " (certified)" : " (uncertified)")
              << " pi=" << a.pi << " pi3=" << a.pi3 << " m_size=" << a.m_size;
    if (a.mu)
        std::cout << " mu=" << *a.mu;
    else
        std::cout << " mu=-";
    std::cout << "\n";
    std::cout << "v_i=" << a.v_i << " v_d=" << a.v_d << " v_m=" << a.v_m << "\n";
    std::cout << "l_phi=" << a.l_phi << " l_mu=";
    if (a.l_mu)
        std::cout << *a.l_mu;
    else
        std::cout << "-";
    std::cout << "\n";
    if (res.opt)
        std::cout << "opt=" << *res.opt << " ratio=" << *res.ratio << "\n";

    if (check_claims_flag) {
        bool all_ok = true;
        for (const auto& r : a.claims.records) {
            std::cout << r.name << ": " << r.lhs << (r.exact ? " == " : " <= ") << r.rhs << " "
                      << (r.ok ? "ok" : "VIOLATED") << "\n";
            all_ok = all_ok && r.ok;
        }
        if (a.lemma3_ok) {
            std::cout << "lemma-3: " << (*a.lemma3_ok ? "ok" : "VIOLATED") << "\n";
            all_ok = all_ok && *a.lemma3_ok;
        }
        if (!all_ok) throw earspan::internal_error("claim check failed");
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"minimum 2-vertex-connected spanning subgraph toolkit"};
    app.require_subcommand(1);

    std::string file, format = "edges";
    bool with_oracle = false, check_claims_flag = false;
    std::string dot_path, report_path, trace_path;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand(
        "solve", "approximate a minimum 2-vertex-connected spanning subgraph");
    solve->add_option("file", file, "input graph file")->required();
    solve->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"edges", "dimacs"}));
    solve->add_flag("--oracle", with_oracle, "also compute the exact optimum (guarded)");
    solve->add_flag("--check-claims", check_claims_flag,
                    "print and enforce the edge-count inequalities");
    solve->add_option("--emit-dot", dot_path, "write the final decomposition as DOT");
    solve->add_option("--report", report_path, "write the JSON report");
    solve->add_option("--trace", trace_path, "write a JSONL rewrite trace");
    solve->add_option("--seed", seed, "reserved; the pipeline is deterministic");

    std::string gen_kind;
    std::vector<std::string> gen_params;
    auto* gen = app.add_subcommand("gen", "generate a graph as an edge list on stdout");
    gen->add_option("kind", gen_kind,
                    "regular3 | wheel | hypercube | cycle | named | gadget_lift")
        ->required();
    gen->add_option("params", gen_params, "generator parameters");
    gen->add_option("--seed", seed, "random seed");

    std::string gadget_file, gadget_format = "edges";
    auto* gadget = app.add_subcommand(
        "gadget", "replace every degree-2 vertex by a 4-clique block");
    gadget->add_option("file", gadget_file, "input graph file")->required();
    gadget->add_option("--format", gadget_format, "input format")
        ->check(CLI::IsMember({"edges", "dimacs"}));

    std::string oracle_file, oracle_format = "edges";
    auto* oracle = app.add_subcommand(
        "oracle", "exact minimum 2-vertex-connected spanning subgraph (guarded)");
    oracle->add_option("file", oracle_file, "input graph file")->required();
    oracle->add_option("--format", oracle_format, "input format")
        ->check(CLI::IsMember({"edges", "dimacs"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (solve->parsed())
        return run_solve(file, format, with_oracle, check_claims_flag, dot_path, report_path,
                         trace_path);
    if (gen->parsed()) {
        earspan::graph g = gen_dispatch(gen_kind, gen_params, seed);
        earspan::write_edge_list(std::cout, g);
        return 0;
    }
    if (gadget->parsed()) {
        earspan::graph g = earspan::load_graph(gadget_file, gadget_format);
        earspan::gadget_lift gl = earspan::degree2_to_k4(g);
        earspan::write_edge_list(std::cout, gl.lifted);
        return 0;
    }
    if (oracle->parsed()) {
        earspan::graph g = earspan::load_graph(oracle_file, oracle_format);
        earspan::opt_result r = earspan::opt_2vcss_bruteforce(g);
        std::cout << "# opt = " << r.opt << "\n";
        std::cout << g.n() << ' ' << r.witness.size() << "\n";
        for (const auto& [u, v] : r.witness) std::cout << u << ' ' << v << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const earspan::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const earspan::generation_failed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const earspan::not_two_connected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const earspan::min_degree_too_low& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const earspan::instance_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const earspan::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
