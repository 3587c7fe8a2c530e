// clusterfit: exact cluster-quality measures, brute-force solvers,
// hardness-gadget constructions and the reduction verification sweep.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clusterfit/cubic.hpp"
#include "clusterfit/graph.hpp"
#include "clusterfit/graph_io.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/rational.hpp"
#include "clusterfit/reductions.hpp"
#include "clusterfit/solvers.hpp"
#include "clusterfit/subsets.hpp"
#include "clusterfit/verify.hpp"

namespace fs = std::filesystem;
using namespace cfit;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

VertexSubset parse_subset(const std::string& text, int n) {
    VertexSubset subset(n);
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) {
            throw std::invalid_argument("empty entry in subset list '" + text + "'");
        }
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("bad vertex id '" + token + "'");
        }
        subset.insert(v);
    }
    return subset;
}

std::string format_vertices(const VertexSubset& s) {
    std::string out;
    for (int v : s.vertices()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out;
}

std::string hex_hash(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct GenOptions {
    int n = 0;
    std::uint64_t seed = 1;
    int count = 1;
    bool enumerate = false;
    std::string out;
    std::string out_dir;
};

int run_gen(const GenOptions& opt) {
    if (opt.enumerate) {
        std::uint64_t count = 0;
        for_each_cubic(opt.n, [&](const Graph& g) {
            if (!opt.out_dir.empty()) {
                std::ostringstream name;
                name << "cubic_n" << opt.n << "_" << std::setw(5) << std::setfill('0') << count
                     << ".g";
                fs::path path = fs::path(opt.out_dir) / name.str();
                write_graph_file(path, g);
                std::cout << path.string() << "\n";
            }
            ++count;
            return true;
        });
        std::cout << "count=" << count << "\n";
        return kExitYes;
    }

    if (opt.count < 1) {
        throw std::invalid_argument("--count must be positive");
    }
    if (opt.count > 1 && opt.out_dir.empty()) {
        throw std::invalid_argument("--count > 1 needs --out-dir");
    }
    for (int i = 0; i < opt.count; ++i) {
        Graph g = generate_random_cubic(opt.n, opt.seed + static_cast<std::uint64_t>(i));
        if (!opt.out_dir.empty()) {
            std::ostringstream name;
            name << "cubic_n" << opt.n << "_s" << opt.seed + static_cast<std::uint64_t>(i) << ".g";
            fs::path path = fs::path(opt.out_dir) / name.str();
            write_graph_file(path, g);
            std::cout << path.string() << "\n";
        } else if (!opt.out.empty()) {
            write_graph_file(opt.out, g);
            std::cout << opt.out << "\n";
        } else {
            std::cout << write_graph(g);
        }
    }
    return kExitYes;
}

struct SolveOptions {
    std::string graph_file;
    std::string kind;
    std::optional<int> k;
    int jobs = 1;
    std::uint64_t seed = 1;
    int restarts = 8;
};

int run_solve(const SolveOptions& opt) {
    Graph g = read_graph_file(opt.graph_file);
    Optimum result;
    if (opt.kind == "max-cut") {
        result = max_cut(g, opt.jobs);
    } else if (opt.kind == "min-bisection") {
        result = min_bisection(g, opt.jobs);
    } else if (opt.kind == "conductance") {
        result = min_conductance(g, opt.jobs);
    } else if (opt.kind == "conductance-local") {
        result = local_search_min_conductance(g, opt.seed, opt.restarts);
    } else if (opt.kind == "local-density" || opt.kind == "relative-density" ||
               opt.kind == "editing") {
        if (!opt.k) {
            throw std::invalid_argument("--kind " + opt.kind + " needs --k");
        }
        if (opt.kind == "editing") {
            result = min_editing(g, *opt.k, opt.jobs);
        } else {
            result = best_density(g, *opt.k,
                                  opt.kind == "local-density" ? DensityKind::local
                                                              : DensityKind::relative,
                                  opt.jobs);
        }
    } else {
        throw std::invalid_argument("unknown solve kind '" + opt.kind + "'");
    }
    std::cout << "value=" << result.value.str() << " witness=" << format_vertices(result.witness)
              << " explored=" << result.explored;
    if (result.degenerate) {
        std::cout << " degenerate=yes";
    }
    std::cout << "\n";
    return kExitYes;
}

struct DecideOptions {
    std::string graph_file;
    std::string kind;
    std::optional<int> k;
    std::string threshold;
    std::optional<int> a;
    int jobs = 1;
};

int run_decide(const DecideOptions& opt) {
    auto kind = parse_problem_kind(opt.kind);
    if (!kind) {
        throw std::invalid_argument("unknown decision kind '" + opt.kind + "'");
    }
    if (opt.threshold.empty() == !opt.a) {
        throw std::invalid_argument("give exactly one of --threshold and --a");
    }
    DecisionInstance inst;
    inst.graph = read_graph_file(opt.graph_file);
    inst.kind = *kind;
    inst.k = opt.k;
    inst.threshold = opt.a ? Rational(*opt.a) : Rational::parse(opt.threshold);
    Decision decision = decide(inst, opt.jobs);
    if (decision.yes) {
        std::cout << "yes optimum=" << decision.optimum.str()
                  << " witness=" << format_vertices(*decision.witness) << "\n";
        return kExitYes;
    }
    std::cout << "no optimum=" << decision.optimum.str() << "\n";
    return kExitNo;
}

struct ReduceOptions {
    std::string kind;
    std::string graph_file;
    int a = 0;
    std::string out;
};

int run_reduce(const ReduceOptions& opt) {
    Graph g = read_graph_file(opt.graph_file);
    std::string source_hash = hex_hash(graph_hash(g));
    int n = g.vertex_count();
    if (opt.kind == "conductance") {
        ConductanceReduction red = build_conductance_instance(g, opt.a);
        write_graph_file(opt.out, red.target);
        std::cout << "kind=conductance source_hash=" << source_hash << " n=" << n
                  << " a=" << opt.a << " phi=" << red.phi.str() << " target=" << opt.out
                  << " target_vertices=" << red.target.vertex_count()
                  << " target_edges=" << red.target.edge_count() << "\n";
    } else if (opt.kind == "density") {
        DensityReduction red = build_density_instance(g, opt.a);
        write_graph_file(opt.out, red.source);
        std::cout << "kind=density source_hash=" << source_hash << " n=" << n << " a=" << opt.a
                  << " k=" << red.k << " r=" << red.r.str() << " target=" << opt.out << "\n";
    } else if (opt.kind == "editing") {
        EditingReduction red = build_editing_instance(g, opt.a);
        write_graph_file(opt.out, red.source);
        std::cout << "kind=editing source_hash=" << source_hash << " n=" << n << " a=" << opt.a
                  << " k=" << red.k << " m=" << red.m.str() << " target=" << opt.out << "\n";
    } else {
        throw std::invalid_argument("unknown reduction kind '" + opt.kind + "'");
    }
    return kExitYes;
}

struct VerifyOptions {
    std::string kind;
    int n_max = 6;
    int jobs = 1;
    std::optional<int> a;
    bool summary_only = false;
};

int run_verify(const VerifyOptions& opt) {
    auto kind = parse_reduction_kind(opt.kind);
    if (!kind) {
        throw std::invalid_argument("unknown reduction kind '" + opt.kind + "'");
    }
    GraphVerificationSink sink;
    if (!opt.summary_only) {
        sink = [](const GraphVerification& report) {
            for (const ThresholdRow& row : report.rows) {
                std::cout << "row kind=" << reduction_kind_name(report.kind) << " n=" << report.n
                          << " index=" << report.index << " hash=" << hex_hash(report.hash)
                          << " a=" << row.a << " source=" << yes_no(row.source_yes)
                          << " target=" << yes_no(row.target_yes)
                          << " witness=" << (row.witness_ok ? "ok" : "fail")
                          << " agree=" << yes_no(row.agree) << "\n";
            }
        };
    }
    VerificationSummary summary = verify_reduction(*kind, opt.n_max, opt.jobs, sink, opt.a);
    std::cout << "summary kind=" << reduction_kind_name(summary.kind)
              << " graphs=" << summary.graphs << " rows=" << summary.rows
              << " mismatches=" << summary.mismatches
              << " witness_failures=" << summary.witness_failures
              << " elapsed_ms=" << static_cast<std::uint64_t>(summary.elapsed_ms) << "\n";
    return summary.mismatches == 0 && summary.witness_failures == 0 ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph cluster measures, solvers and reduction harness"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate or enumerate cubic graphs");
    gen_cmd->add_option("--n", gen.n, "vertex count (even, >= 4)")->required();
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--count", gen.count, "number of random graphs");
    gen_cmd->add_flag("--enumerate", gen.enumerate, "enumerate all labeled cubic graphs");
    gen_cmd->add_option("--out", gen.out, "output file (single graph)");
    gen_cmd->add_option("--out-dir", gen.out_dir, "output directory");

    std::string measure_graph;
    std::string measure_subset;
    std::string measure_kind;
    CLI::App* measure_cmd = app.add_subcommand("measure", "evaluate a cluster measure");
    measure_cmd->add_option("--graph", measure_graph, "graph file")->required();
    measure_cmd->add_option("--subset", measure_subset, "comma-separated vertex ids")->required();
    measure_cmd
        ->add_option("--kind", measure_kind,
                     "conductance|local-density|relative-density|editing")
        ->required();

    SolveOptions solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run an exact optimizer");
    solve_cmd->add_option("--graph", solve.graph_file, "graph file")->required();
    solve_cmd
        ->add_option("--kind", solve.kind,
                     "max-cut|min-bisection|conductance|local-density|relative-density|editing|"
                     "conductance-local")
        ->required();
    solve_cmd->add_option("--k", solve.k, "subset cardinality (density/editing)");
    solve_cmd->add_option("--jobs", solve.jobs, "worker threads (0 = all cores)");
    solve_cmd->add_option("--seed", solve.seed, "seed for conductance-local");
    solve_cmd->add_option("--restarts", solve.restarts, "restarts for conductance-local");

    DecideOptions dec;
    CLI::App* decide_cmd = app.add_subcommand("decide", "answer a threshold decision");
    decide_cmd->add_option("--graph", dec.graph_file, "graph file")->required();
    decide_cmd
        ->add_option("--kind", dec.kind,
                     "conductance|local-density|relative-density|editing|max-cut|min-bisection")
        ->required();
    decide_cmd->add_option("--k", dec.k, "subset cardinality (density/editing)");
    decide_cmd->add_option("--threshold", dec.threshold, "rational threshold p/q");
    decide_cmd->add_option("--a", dec.a, "integer threshold");
    decide_cmd->add_option("--jobs", dec.jobs, "worker threads (0 = all cores)");

    ReduceOptions red;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "build a reduction target instance");
    reduce_cmd->add_option("--kind", red.kind, "conductance|density|editing")->required();
    reduce_cmd->add_option("--graph", red.graph_file, "cubic source graph file")->required();
    reduce_cmd->add_option("--a", red.a, "cut budget (positive)")->required();
    reduce_cmd->add_option("--out", red.out, "target graph file")->required();

    VerifyOptions ver;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive reduction equivalence sweep");
    verify_cmd->add_option("--kind", ver.kind, "conductance|density|editing")->required();
    verify_cmd->add_option("--n-max", ver.n_max, "largest source size (4, 6 or 8)");
    verify_cmd->add_option("--jobs", ver.jobs, "worker threads (0 = all cores)");
    verify_cmd->add_option("--a", ver.a, "check a single threshold instead of the full sweep");
    verify_cmd->add_flag("--summary-only", ver.summary_only, "suppress per-row records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
        if (measure_cmd->parsed()) {
            Graph g = read_graph_file(measure_graph);
            auto kind = parse_measure_kind(measure_kind);
            if (!kind) {
                throw std::invalid_argument("unknown measure kind '" + measure_kind + "'");
            }
            VertexSubset subset = parse_subset(measure_subset, g.vertex_count());
            std::cout << evaluate_measure(*kind, g, subset).value.str() << "\n";
            return kExitYes;
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve);
        }
        if (decide_cmd->parsed()) {
            return run_decide(dec);
        }
        if (reduce_cmd->parsed()) {
            return run_reduce(red);
        }
        if (verify_cmd->parsed()) {
            return run_verify(ver);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
