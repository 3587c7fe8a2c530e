#pragma once

#include <utility>

#include "clusterfit/graph.hpp"
#include "clusterfit/rational.hpp"

namespace cfit {

// Target instances built from a cubic source graph on n vertices and a
// positive cut budget a. Decisions on the target coincide with the source
// question by construction; the verification harness checks that
// empirically (see verify.hpp).

struct ConductanceReduction {
    Graph source;
    int a = 0;
    // Two fully connected copies of the complement of the source: copy 1
    // keeps vertex ids, copy 2 shifts them by n, and every cross pair
    // {u, v+n} is an edge. 2n vertices, (2n-4)n edges, all degrees 2n-4.
    Graph target;
    Rational phi;
};

struct DensityReduction {
    Graph source;
    int a = 0;
    int k = 0;       // n/2
    Rational r;
};

struct EditingReduction {
    Graph source;
    int a = 0;
    int k = 0;       // n/2
    Rational m;      // may be non-integral; compared exactly, never rounded
};

// Threshold formulas, exposed separately so a sweep over a does not have
// to rebuild the instance.
Rational conductance_threshold(int n, int a);   // (n - 2a/n) / (2n-4)
Rational density_threshold(int n, int a);       // (3n - 2a) / (3n + 2a)
Rational editing_budget(int n, int a);          // (12a + n(n-8)) / 8

ConductanceReduction build_conductance_instance(const Graph& g, int a);
DensityReduction build_density_instance(const Graph& g, int a);
EditingReduction build_editing_instance(const Graph& g, int a);

// Cut over the doubled vertex set whose copy-1 projection is a_set and
// whose copy-2 projection is its complement. Always has exactly n members.
VertexSubset lift_cut(const VertexSubset& a_set, int n);

// Per-copy projections of a subset of the doubled vertex set;
// project_cut(lift_cut(A, n), n) == (A, complement of A).
std::pair<VertexSubset, VertexSubset> project_cut(const VertexSubset& s, int n);

// Closed form for the conductance of s in the target graph, computed from
// the source cuts of the two projections. Equals conductance(target, s)
// for every proper nonempty s.
Rational predicted_conductance(const ConductanceReduction& red, const VertexSubset& s);

// Closed form for the conductance of lift_cut(a_set, n) in the target:
// (n - 2 c(a_set)/n) / (2n-4). At most phi whenever c(a_set) >= a.
Rational conductance_of_lift(const ConductanceReduction& red, const VertexSubset& a_set);

}  // namespace cfit
