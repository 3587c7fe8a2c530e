#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "clusterfit/graph.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/rational.hpp"

namespace cfit {

inline constexpr int kMaxSolverVertices = 63;

struct Optimum {
    VertexSubset witness;
    Rational value;
    std::uint64_t explored = 0;
    // Set when the optimum comes from the defined-zero convention on a
    // graph with no edges rather than from a real ratio.
    bool degenerate = false;
};

enum class DensityKind { local, relative };

// Exhaustive optimizers. All of them report the canonical witness: among
// the subsets attaining the optimal value, the one with the numerically
// smallest bitmask. `workers` splits the enumeration range; 0 means one
// worker per hardware thread. Results never depend on the worker count.
Optimum max_cut(const Graph& g, int workers = 1);
Optimum min_bisection(const Graph& g, int workers = 1);
Optimum min_conductance(const Graph& g, int workers = 1);
Optimum best_density(const Graph& g, int k, DensityKind kind, int workers = 1);
Optimum min_editing(const Graph& g, int k, int workers = 1);

enum class ProblemKind { conductance, local_density, relative_density, editing, max_cut, min_bisection };

struct DecisionInstance {
    Graph graph;
    ProblemKind kind;
    std::optional<int> k;            // required for the density and editing problems
    Rational threshold;
};

struct Decision {
    bool yes = false;
    std::optional<VertexSubset> witness;   // canonical witness when yes
    Rational optimum;                      // the optimal value the answer was read from
};

// Direction per problem: conductance <=, densities >=, editing <=,
// max cut >=, bisection <=. Comparisons are exact.
Decision decide(const DecisionInstance& inst, int workers = 1);

// Steepest-descent single-vertex-move search from random starts. The value
// is an upper bound on the true minimum; deterministic for a fixed seed.
Optimum local_search_min_conductance(const Graph& g, std::uint64_t seed, int restarts);

std::string_view problem_kind_name(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

}  // namespace cfit
