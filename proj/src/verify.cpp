#include "clusterfit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

#include "clusterfit/cubic.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/reductions.hpp"
#include "clusterfit/solvers.hpp"

namespace cfit {

namespace {

GraphVerification verify_graph(ReductionKind kind, const Graph& g, int n, std::uint64_t index,
                               std::optional<int> a_override) {
    auto started = std::chrono::steady_clock::now();
    GraphVerification report;
    report.kind = kind;
    report.n = n;
    report.index = index;
    report.hash = graph_hash(g);

    int a_begin = a_override.value_or(1);
    int a_max = a_override.value_or(3 * n / 2);
    report.rows.reserve(static_cast<std::size_t>(a_max - a_begin + 1));

    if (kind == ReductionKind::conductance) {
        Optimum source_opt = max_cut(g);
        ConductanceReduction red = build_conductance_instance(g, 1);
        Optimum target_opt = min_conductance(red.target);
        // The lifted source witness is re-checked against the target
        // threshold by direct evaluation, not through the closed form.
        Rational lifted_value = conductance(red.target, lift_cut(source_opt.witness, n));
        for (int a = a_begin; a <= a_max; ++a) {
            Rational phi = conductance_threshold(n, a);
            ThresholdRow row;
            row.a = a;
            row.source_yes = source_opt.value >= Rational(a);
            row.target_yes = target_opt.value <= phi;
            if (row.source_yes && row.target_yes) {
                row.witness_ok = lifted_value <= phi;
            }
            row.agree = row.source_yes == row.target_yes;
            report.rows.push_back(row);
        }
    } else {
        Optimum source_opt = min_bisection(g);
        int half = n / 2;
        Optimum target_opt = kind == ReductionKind::density
                                 ? best_density(g, half, DensityKind::relative)
                                 : min_editing(g, half);
        Rational witness_value = kind == ReductionKind::density
                                     ? relative_density(g, source_opt.witness)
                                     : single_cluster_editing(g, source_opt.witness);
        for (int a = a_begin; a <= a_max; ++a) {
            ThresholdRow row;
            row.a = a;
            row.source_yes = source_opt.value <= Rational(a);
            if (kind == ReductionKind::density) {
                Rational r = density_threshold(n, a);
                row.target_yes = target_opt.value >= r;
                if (row.source_yes && row.target_yes) {
                    row.witness_ok = witness_value >= r;
                }
            } else {
                Rational m = editing_budget(n, a);
                row.target_yes = target_opt.value <= m;
                if (row.source_yes && row.target_yes) {
                    row.witness_ok = witness_value <= m;
                }
            }
            row.agree = row.source_yes == row.target_yes;
            report.rows.push_back(row);
        }
    }

    for (const ThresholdRow& row : report.rows) {
        report.mismatches += !row.agree;
        report.witness_failures += !row.witness_ok;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace

VerificationSummary verify_reduction(ReductionKind kind, int n_max, int workers,
                                     const GraphVerificationSink& sink,
                                     std::optional<int> a_override) {
    if (n_max < 4 || n_max % 2 != 0 || n_max > kMaxEnumerableCubic) {
        throw std::invalid_argument("verification sweep needs n_max in {4, 6, 8}, got " +
                                    std::to_string(n_max));
    }
    if (a_override && *a_override < 1) {
        throw std::invalid_argument("threshold override must be positive");
    }
    if (workers < 0) {
        throw std::invalid_argument("negative worker count");
    }
    if (workers == 0) {
        workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    }

    auto started = std::chrono::steady_clock::now();
    VerificationSummary summary;
    summary.kind = kind;

    for (int n = 4; n <= n_max; n += 2) {
        std::vector<Graph> graphs = all_cubic_graphs(n);
        std::vector<GraphVerification> reports(graphs.size());
        int spawn = std::min<int>(workers, static_cast<int>(graphs.size()));
        if (spawn <= 1) {
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                reports[i] = verify_graph(kind, graphs[i], n, i, a_override);
            }
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::thread> threads;
            threads.reserve(static_cast<std::size_t>(spawn));
            for (int w = 0; w < spawn; ++w) {
                threads.emplace_back([&] {
                    for (;;) {
                        std::size_t i = cursor.fetch_add(1);
                        if (i >= graphs.size()) {
                            return;
                        }
                        reports[i] = verify_graph(kind, graphs[i], n, i, a_override);
                    }
                });
            }
            for (auto& t : threads) {
                t.join();
            }
        }
        // Reports go out in enumeration order no matter how the work was
        // scheduled.
        for (const GraphVerification& report : reports) {
            summary.graphs += 1;
            summary.rows += report.rows.size();
            summary.mismatches += report.mismatches;
            summary.witness_failures += report.witness_failures;
            if (sink) {
                sink(report);
            }
        }
    }

    summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return summary;
}

std::string_view reduction_kind_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::conductance: return "conductance";
        case ReductionKind::density: return "density";
        case ReductionKind::editing: return "editing";
    }
    return "?";
}

std::optional<ReductionKind> parse_reduction_kind(std::string_view name) {
    if (name == "conductance") return ReductionKind::conductance;
    if (name == "density") return ReductionKind::density;
    if (name == "editing") return ReductionKind::editing;
    return std::nullopt;
}

}  // namespace cfit
