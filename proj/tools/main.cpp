// eigsum command-line tool.
//
// Exit codes: 0 success, 1 an asserted bound failed, 2 bad input or arguments
// (including a disconnected graph for embed-cert), 3 eigensolver failure,
// 4 internal inconsistency between two evaluations of the same quantity.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eigsum/error.hpp"
#include "eigsum/generators.hpp"
#include "eigsum/io.hpp"
#include "eigsum/json_writer.hpp"
#include "eigsum/lattice_bounds.hpp"
#include "eigsum/suites.hpp"

#ifndef EIGSUM_VERSION
#define EIGSUM_VERSION "0.0.0"
#endif

namespace {

using namespace eigsum;

constexpr std::size_t kLargeN = 2000;

struct Globals {
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 1;
    std::string out;
    std::string solver = "tridiagonal";
    bool compact = false;
    std::string command_line;
};

EigenSolver solver_of(const Globals& g) { return g.solver == "jacobi" ? EigenSolver::jacobi : EigenSolver::tridiagonal; }

void emit(const Globals& gl, const std::string& text) {
    if (gl.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(gl.out, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot open output file " + gl.out);
    }
    f << text;
}

void warn_large(const Graph& g) {
    if (g.order() > kLargeN) {
        std::cerr << "warning: n = " << g.order() << " exceeds " << kLargeN
                  << "; dense eigensolves and full k-sweeps will be slow\n";
    }
}

RunManifest manifest(const Globals& gl, const std::string& canonical) {
    RunManifest m;
    m.tool_version = EIGSUM_VERSION;
    m.input_digest = hex64(fnv1a64(canonical));
    m.seed = gl.seed;
    m.tolerance = gl.tolerance;
    m.command_line = gl.command_line;
    return m;
}

// gen ---------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> p;
    double prob = 0.3;
    std::size_t nu = 2;
};

int cmd_gen(const Globals& gl, const GenArgs& a) {
    std::ostringstream text;
    const auto& f = a.family;
    if (f == "lattice") {
        auto pts = gen_random_lattice_cluster(a.nu, a.n, gl.seed);
        write_lattice(text, gen_lattice_subgraph(std::move(pts), a.nu, true));
    } else {
        const Graph g = [&] {
            if (f == "path") return gen_path(a.n);
            if (f == "cycle") return gen_cycle(a.n);
            if (f == "complete") return gen_complete(a.n);
            if (f == "star") return gen_star(a.n);
            if (f == "join") {
                if (!a.p) {
                    throw InvalidArgument("join needs p");
                }
                return gen_join(a.n, *a.p);
            }
            if (f == "random") return gen_random_connected(a.n, a.prob, gl.seed);
            throw InvalidArgument("unknown family '" + f + "'");
        }();
        write_edge_list(text, g);
    }
    emit(gl, text.str());
    return 0;
}

// spectrum ----------------------------------------------------------------

MatrixKind parse_kind(const std::string& s) {
    if (s == "adjacency") return MatrixKind::adjacency;
    if (s == "laplacian") return MatrixKind::laplacian;
    if (s == "normalized") return MatrixKind::normalized;
    throw InvalidArgument("unknown matrix kind '" + s + "'");
}

int cmd_spectrum(const Globals& gl, const std::string& file, const std::string& kind) {
    const Graph g = read_edge_list_file(file);
    warn_large(g);
    std::ostringstream text;
    write_spectrum_csv(text, spectrum(g, parse_kind(kind), false, solver_of(gl)));
    emit(gl, text.str());
    return 0;
}

// bounds / report ---------------------------------------------------------

struct BoundsArgs {
    std::string suite = "all";
    std::string file;
    std::optional<std::size_t> k;
    std::optional<std::size_t> L;
    std::string strategy = "greedy";
    std::string pair_strategy = "greedy";
    bool squares = false;
    std::string pairs_file;
    bool verbatim = false;
    std::string format = "json";
};

SubsetStrategy parse_subset_strategy(const std::string& s) {
    if (s == "greedy") return SubsetStrategy::greedy_degree;
    if (s == "sorted") return SubsetStrategy::degree_sorted;
    if (s == "exhaustive") return SubsetStrategy::exhaustive;
    throw InvalidArgument("unknown subset strategy '" + s + "'");
}

std::string render_reports(const Globals& gl, const std::vector<BoundReport>& reports, const std::string& format,
                           const RunManifest* m) {
    std::ostringstream text;
    if (format == "csv") {
        if (m) {
            text << "# tool_version=" << m->tool_version << "\n# input_digest=" << m->input_digest
                 << "\n# seed=" << m->seed << "\n# tolerance=" << format_double(m->tolerance)
                 << "\n# command_line=" << m->command_line << '\n';
        }
        write_reports_csv(text, reports);
        return text.str();
    }
    JsonWriter w(text, !gl.compact);
    write_reports(w, reports);
    return text.str();
}

SuiteOptions suite_options(const Globals& gl, const BoundsArgs& a) {
    SuiteOptions o;
    o.k = a.k;
    o.L = a.L;
    o.subset_strategy = parse_subset_strategy(a.strategy);
    o.pair_strategy = a.pair_strategy == "exhaustive" ? PairStrategy::exhaustive_small : PairStrategy::greedy;
    o.squares = a.squares;
    o.verbatim = a.verbatim;
    o.tol = gl.tolerance;
    if (!a.pairs_file.empty()) {
        o.pairs = read_pairs_file(a.pairs_file);
    }
    return o;
}

int cmd_bounds(const Globals& gl, const BoundsArgs& a) {
    const Graph g = read_edge_list_file(a.file);
    warn_large(g);
    SpectrumCache sc(g, solver_of(gl));
    const auto reports = run_suite(g, parse_suite(a.suite), suite_options(gl, a), sc);
    emit(gl, render_reports(gl, reports, a.format, nullptr));
    return any_failure(reports) ? 1 : 0;
}

int cmd_report(const Globals& gl, const BoundsArgs& a, std::size_t max_dim) {
    const Graph g = read_edge_list_file(a.file);
    warn_large(g);
    SpectrumCache sc(g, solver_of(gl));
    BoundsArgs full = a;
    full.squares = true;
    full.verbatim = true;
    const auto reports = run_suite(g, Suite::all, suite_options(gl, full), sc);
    const RunManifest m = manifest(gl, edge_list_text(g));

    std::vector<EmbedVerdict> verdicts;
    if (max_dim > 0 && g.order() > 0 && is_connected(g)) {
        verdicts = embeddability_certificate(g, sc.get(MatrixKind::laplacian), max_dim, gl.tolerance);
    }

    if (a.format == "csv") {
        emit(gl, render_reports(gl, reports, "csv", &m));
    } else {
        std::ostringstream text;
        JsonWriter w(text, !gl.compact);
        w.begin_object();
        w.key("manifest");
        write_manifest(w, m);
        w.key("reports");
        write_reports(w, reports);
        w.key("embedding").begin_array();
        for (const auto& v : verdicts) {
            write_verdict(w, v);
        }
        w.end_array();
        w.end_object();
        emit(gl, text.str());
    }
    return any_failure(reports) ? 1 : 0;
}

// lattice / embed-cert ----------------------------------------------------

int cmd_lattice_check(const Globals& gl, const std::string& file) {
    const LatticeGraph lg = read_lattice_file(file);
    warn_large(lg.graph);
    const Spectrum lap = spectrum(lg.graph, MatrixKind::laplacian, false, solver_of(gl));
    const auto reports = verify_embedding(lg.graph, lg.embedding, lap, {}, gl.tolerance);
    std::ostringstream text;
    JsonWriter w(text, !gl.compact);
    write_reports(w, reports);
    emit(gl, text.str());
    return any_failure(reports) ? 1 : 0;
}

int cmd_embed_cert(const Globals& gl, const std::string& file, std::size_t max_dim) {
    const Graph g = read_edge_list_file(file);
    warn_large(g);
    if (g.order() == 0 || !is_connected(g)) {
        std::cerr << "error: embed-cert needs a connected graph\n";
        return 2;
    }
    const Spectrum lap = spectrum(g, MatrixKind::laplacian, false, solver_of(gl));
    const auto verdicts = embeddability_certificate(g, lap, max_dim, gl.tolerance);
    std::ostringstream text;
    JsonWriter w(text, !gl.compact);
    w.begin_array();
    for (const auto& v : verdicts) {
        write_verdict(w, v);
    }
    w.end_array();
    emit(gl, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Globals gl;
    for (int i = 0; i < argc; ++i) {
        gl.command_line += (i ? " " : "") + std::string(argv[i]);
    }

    CLI::App app{"Eigenvalue-sum bounds for graph spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", EIGSUM_VERSION);
    app.add_option("--tolerance", gl.tolerance, "Relative tolerance of every verdict")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", gl.seed, "Seed for random generators")->capture_default_str();
    app.add_option("--out", gl.out, "Write output to this file instead of stdout");
    app.add_option("--solver", gl.solver, "Dense eigensolver")
        ->check(CLI::IsMember({"tridiagonal", "jacobi"}))
        ->capture_default_str();
    app.add_flag("--compact", gl.compact, "Single-line JSON");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generator-family graph");
    gen_cmd->add_option("family", gen.family, "path, cycle, complete, star, join, random or lattice")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "star", "join", "random", "lattice"}));
    gen_cmd->add_option("n", gen.n, "Number of vertices")->required();
    gen_cmd->add_option("p", gen.p, "Clique size of the join family");
    gen_cmd->add_option("--prob", gen.prob, "Edge probability (random)")->capture_default_str();
    gen_cmd->add_option("--nu", gen.nu, "Lattice dimension (lattice)")->capture_default_str();

    std::string spec_file;
    std::string kind = "laplacian";
    auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues as CSV in canonical order");
    spec_cmd->add_option("file,--file", spec_file, "Edge-list file")->required();
    spec_cmd->add_option("--kind", kind, "adjacency, laplacian or normalized")
        ->check(CLI::IsMember({"adjacency", "laplacian", "normalized"}))
        ->capture_default_str();

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Audit eigenvalue-sum bounds");
    bounds_cmd->add_option("suite", bounds.suite)
        ->check(CLI::IsMember({"traces", "fiedler", "lsum", "laplacian-pairs", "normalized", "adjacency", "all"}))
        ->capture_default_str();
    bounds_cmd->add_option("--file", bounds.file, "Edge-list file")->required();
    bounds_cmd->add_option("--k", bounds.k, "Restrict the pair-set suites to one k");
    bounds_cmd->add_option("--L", bounds.L, "Restrict the L-sum suite to one L");
    bounds_cmd->add_option("--strategy", bounds.strategy, "Subset strategy: greedy, sorted or exhaustive")
        ->check(CLI::IsMember({"greedy", "sorted", "exhaustive"}))
        ->capture_default_str();
    bounds_cmd->add_option("--pair-strategy", bounds.pair_strategy, "Pair strategy: greedy or exhaustive")
        ->check(CLI::IsMember({"greedy", "exhaustive"}))
        ->capture_default_str();
    bounds_cmd->add_flag("--squares", bounds.squares, "Include square-sum bounds");
    bounds_cmd->add_option("--pairs-file", bounds.pairs_file, "Explicit pair set, lines 'u v'");
    bounds_cmd->add_flag("--paper-verbatim", bounds.verbatim, "Include informational printed variants");
    bounds_cmd->add_option("--format", bounds.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    std::string lattice_file;
    auto* lattice_cmd = app.add_subcommand("lattice", "Lattice-embedding bounds");
    lattice_cmd->require_subcommand(1);
    auto* check_cmd = lattice_cmd->add_subcommand("check", "Full lattice suite for an embedded graph");
    check_cmd->add_option("file,--file", lattice_file, "Lattice file")->required();

    std::string cert_file;
    std::size_t max_dim = 3;
    auto* cert_cmd = app.add_subcommand("embed-cert", "Necessary conditions for embedding into Z^nu");
    cert_cmd->add_option("file,--file", cert_file, "Edge-list file")->required();
    cert_cmd->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber)->capture_default_str();

    BoundsArgs report;
    std::size_t report_dim = 3;
    auto* report_cmd = app.add_subcommand("report", "Every applicable suite plus a run manifest");
    report_cmd->add_option("file,--file", report.file, "Edge-list file")->required();
    report_cmd->add_option("--format", report.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    report_cmd->add_option("--max-dim", report_dim, "Embedding certificate up to this dimension (0 skips)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen_cmd) return cmd_gen(gl, gen);
        if (*spec_cmd) return cmd_spectrum(gl, spec_file, kind);
        if (*bounds_cmd) return cmd_bounds(gl, bounds);
        if (*check_cmd) return cmd_lattice_check(gl, lattice_file);
        if (*cert_cmd) return cmd_embed_cert(gl, cert_file, max_dim);
        if (*report_cmd) return cmd_report(gl, report, report_dim);
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
