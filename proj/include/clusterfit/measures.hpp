#pragma once

#include <optional>
#include <string_view>

#include "clusterfit/graph.hpp"
#include "clusterfit/rational.hpp"

namespace cfit {

enum class MeasureKind { conductance, local_density, relative_density, editing };

struct MeasureValue {
    MeasureKind kind;
    Rational value;
};

// Cut size over the smaller of the two degree sums. Requires a proper
// nonempty subset. A cut with no crossing edges has conductance 0, also
// when the smaller side has degree sum 0.
Rational conductance(const Graph& g, const VertexSubset& s);

// Induced edges relative to a clique on |s| vertices; 0 for singletons.
Rational local_density(const Graph& g, const VertexSubset& s);

// Induced edges over induced-plus-crossing edges; 0 when s touches no edge.
Rational relative_density(const Graph& g, const VertexSubset& s);

// Edge additions plus deletions needed to turn s into an isolated clique.
Rational single_cluster_editing(const Graph& g, const VertexSubset& s);

MeasureValue evaluate_measure(MeasureKind kind, const Graph& g, const VertexSubset& s);

std::string_view measure_kind_name(MeasureKind kind);
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

}  // namespace cfit
