#include "clusterfit/reductions.hpp"

#include <stdexcept>
#include <string>

#include "clusterfit/measures.hpp"

namespace cfit {

namespace {

void require_cubic_source(const Graph& g, int a) {
    if (!g.is_cubic()) {
        throw std::invalid_argument("reduction source must be a cubic graph");
    }
    if (a < 1) {
        throw std::invalid_argument("cut budget a must be positive");
    }
}

}  // namespace

Rational conductance_threshold(int n, int a) {
    return Rational(static_cast<long long>(n) * n - 2LL * a,
                    static_cast<long long>(n) * (2LL * n - 4));
}

Rational density_threshold(int n, int a) {
    return Rational(3LL * n - 2LL * a, 3LL * n + 2LL * a);
}

Rational editing_budget(int n, int a) {
    return Rational(12LL * a + static_cast<long long>(n) * (n - 8), 8);
}

ConductanceReduction build_conductance_instance(const Graph& g, int a) {
    require_cubic_source(g, a);
    int n = g.vertex_count();
    Graph co = g.complement();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2LL * n - 4) * static_cast<std::size_t>(n));
    for (const auto& [u, v] : co.edges()) {
        edges.emplace_back(u, v);          // copy 1
        edges.emplace_back(u + n, v + n);  // copy 2
    }
    // All cross pairs, including the two copies of the same source vertex.
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            edges.emplace_back(u, v + n);
        }
    }
    ConductanceReduction red;
    red.source = g;
    red.a = a;
    red.target = Graph(2 * n, std::move(edges));
    red.phi = conductance_threshold(n, a);
    return red;
}

DensityReduction build_density_instance(const Graph& g, int a) {
    require_cubic_source(g, a);
    DensityReduction red;
    red.source = g;
    red.a = a;
    red.k = g.vertex_count() / 2;
    red.r = density_threshold(g.vertex_count(), a);
    return red;
}

EditingReduction build_editing_instance(const Graph& g, int a) {
    require_cubic_source(g, a);
    EditingReduction red;
    red.source = g;
    red.a = a;
    red.k = g.vertex_count() / 2;
    red.m = editing_budget(g.vertex_count(), a);
    return red;
}

VertexSubset lift_cut(const VertexSubset& a_set, int n) {
    if (a_set.context_size() != n) {
        throw std::invalid_argument("lift: subset context does not match the source size");
    }
    VertexSubset lifted(2 * n);
    for (int v = 0; v < n; ++v) {
        if (a_set.contains(v)) {
            lifted.insert(v);
        } else {
            lifted.insert(v + n);
        }
    }
    return lifted;
}

std::pair<VertexSubset, VertexSubset> project_cut(const VertexSubset& s, int n) {
    if (s.context_size() != 2 * n) {
        throw std::invalid_argument("project: subset context does not match the doubled size");
    }
    VertexSubset first(n);
    VertexSubset second(n);
    for (int v : s.vertices()) {
        if (v < n) {
            first.insert(v);
        } else {
            second.insert(v - n);
        }
    }
    return {std::move(first), std::move(second)};
}

Rational predicted_conductance(const ConductanceReduction& red, const VertexSubset& s) {
    int n = red.source.vertex_count();
    if (s.context_size() != 2 * n) {
        throw std::invalid_argument("subset context does not match the target graph");
    }
    if (s.empty() || s.full()) {
        throw std::invalid_argument("conductance is undefined for empty or full subsets");
    }
    // Both sides of the cut have the same conductance; evaluate the one
    // with at most n vertices, where the closed form applies.
    const VertexSubset side = s.count() > n ? s.complement() : s;
    long long k = side.count();
    auto [first, second] = project_cut(side, n);
    long long crossings = cut_size(red.source, first) + cut_size(red.source, second);
    return Rational((2LL * n - k) * k - crossings, (2LL * n - 4) * k);
}

Rational conductance_of_lift(const ConductanceReduction& red, const VertexSubset& a_set) {
    int n = red.source.vertex_count();
    if (a_set.context_size() != n) {
        throw std::invalid_argument("subset context does not match the source graph");
    }
    long long crossing = cut_size(red.source, a_set);
    return Rational(static_cast<long long>(n) * n - 2 * crossing,
                    static_cast<long long>(n) * (2LL * n - 4));
}

}  // namespace cfit
