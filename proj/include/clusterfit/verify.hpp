#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "clusterfit/graph.hpp"

namespace cfit {

enum class ReductionKind { conductance, density, editing };

// One (graph, a) equivalence check: the source decision answered by brute
// force against the target decision answered by brute force.
struct ThresholdRow {
    int a = 0;
    bool source_yes = false;
    bool target_yes = false;
    // When both answers are yes, the source optimizer's witness is mapped
    // to the target and re-checked against the target threshold directly.
    bool witness_ok = true;
    bool agree = false;
};

struct GraphVerification {
    ReductionKind kind;
    int n = 0;
    std::uint64_t index = 0;    // position in the n-vertex enumeration
    std::uint64_t hash = 0;     // canonical structure hash of the source
    std::vector<ThresholdRow> rows;
    std::uint64_t mismatches = 0;
    std::uint64_t witness_failures = 0;
    double elapsed_ms = 0.0;
};

struct VerificationSummary {
    ReductionKind kind;
    std::uint64_t graphs = 0;
    std::uint64_t rows = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t witness_failures = 0;
    double elapsed_ms = 0.0;
};

using GraphVerificationSink = std::function<void(const GraphVerification&)>;

// Sweeps every labeled cubic graph on 4..n_max vertices (n_max in {4,6,8})
// and every a in [1, 3n/2] (or just a_override), deciding both sides of
// the reduction by brute force. Graphs may be verified in parallel; the
// sink always receives the per-graph reports in enumeration order.
VerificationSummary verify_reduction(ReductionKind kind, int n_max, int workers = 1,
                                     const GraphVerificationSink& sink = nullptr,
                                     std::optional<int> a_override = std::nullopt);

std::string_view reduction_kind_name(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_kind(std::string_view name);

}  // namespace cfit
