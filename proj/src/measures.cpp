#include "clusterfit/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfit {

namespace {

void require_nonempty(const Graph& g, const VertexSubset& s, const char* what) {
    if (s.context_size() != g.vertex_count()) {
        throw std::invalid_argument(std::string(what) + ": subset context mismatch");
    }
    if (s.empty()) {
        throw std::invalid_argument(std::string(what) + " is undefined for the empty subset");
    }
}

}  // namespace

Rational conductance(const Graph& g, const VertexSubset& s) {
    require_nonempty(g, s, "conductance");
    if (s.full()) {
        throw std::invalid_argument("conductance is undefined for the full vertex set");
    }
    int crossing = cut_size(g, s);
    if (crossing == 0) {
        // Covers the degenerate denominator too: a crossing-free side with
        // degree sum 0 counts as perfectly separated.
        return Rational(0);
    }
    int inside = degree_sum(g, s);
    int outside = 2 * g.edge_count() - inside;
    return Rational(crossing, std::min(inside, outside));
}

Rational local_density(const Graph& g, const VertexSubset& s) {
    require_nonempty(g, s, "local density");
    long long size = s.count();
    if (size == 1) {
        return Rational(0);
    }
    return Rational(2LL * induced_edge_count(g, s), size * (size - 1));
}

Rational relative_density(const Graph& g, const VertexSubset& s) {
    require_nonempty(g, s, "relative density");
    int inside = induced_edge_count(g, s);
    int crossing = cut_size(g, s);
    if (inside + crossing == 0) {
        return Rational(0);
    }
    return Rational(inside, inside + crossing);
}

Rational single_cluster_editing(const Graph& g, const VertexSubset& s) {
    require_nonempty(g, s, "single cluster editing");
    long long size = s.count();
    long long clique_edges = size * (size - 1) / 2;
    return Rational(clique_edges - induced_edge_count(g, s) + cut_size(g, s));
}

MeasureValue evaluate_measure(MeasureKind kind, const Graph& g, const VertexSubset& s) {
    switch (kind) {
        case MeasureKind::conductance:
            return {kind, conductance(g, s)};
        case MeasureKind::local_density:
            return {kind, local_density(g, s)};
        case MeasureKind::relative_density:
            return {kind, relative_density(g, s)};
        case MeasureKind::editing:
            return {kind, single_cluster_editing(g, s)};
    }
    throw std::logic_error("unknown measure kind");
}

std::string_view measure_kind_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::conductance:
            return "conductance";
        case MeasureKind::local_density:
            return "local-density";
        case MeasureKind::relative_density:
            return "relative-density";
        case MeasureKind::editing:
            return "editing";
    }
    return "?";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
    if (name == "conductance") return MeasureKind::conductance;
    if (name == "local-density") return MeasureKind::local_density;
    if (name == "relative-density") return MeasureKind::relative_density;
    if (name == "editing") return MeasureKind::editing;
    return std::nullopt;
}

}  // namespace cfit
