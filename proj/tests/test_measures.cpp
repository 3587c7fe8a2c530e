#include <random>
#include <stdexcept>

#include "clusterfit/cubic.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/subsets.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfit;
using namespace testutil;

TEST_CASE("conductance on fixed graphs") {
    Graph g = k4();
    CHECK(conductance(g, subset_of(g, {0, 1})) == Rational(2, 3));
    CHECK(conductance(g, subset_of(g, {0})) == Rational(1));

    Graph tt = two_triangles();
    CHECK(conductance(tt, subset_of(tt, {0, 1, 2})) == Rational(0));

    // Isolated vertices: a crossing-free side with degree sum zero.
    Graph iso(3, {{1, 2}});
    CHECK(conductance(iso, subset_of(iso, {0})) == Rational(0));

    CHECK_THROWS_AS(conductance(g, VertexSubset(4)), std::invalid_argument);
    CHECK_THROWS_AS(conductance(g, subset_of(g, {0, 1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(conductance(g, VertexSubset(7)), std::invalid_argument);
}

TEST_CASE("local density on fixed graphs") {
    Graph g = k4();
    CHECK(local_density(g, subset_of(g, {0, 1, 2})) == Rational(1));
    CHECK(local_density(g, subset_of(g, {2})) == Rational(0));

    Graph p = path3();
    CHECK(local_density(p, subset_of(p, {0, 2})) == Rational(0));
    CHECK(local_density(p, subset_of(p, {0, 1})) == Rational(1));
    CHECK(local_density(p, subset_of(p, {0, 1, 2})) == Rational(2, 3));

    CHECK_THROWS_AS(local_density(g, VertexSubset(4)), std::invalid_argument);
}

TEST_CASE("relative density on fixed graphs") {
    Graph g = k4();
    CHECK(relative_density(g, subset_of(g, {0, 1})) == Rational(1, 5));

    Graph tt = two_triangles();
    CHECK(relative_density(tt, subset_of(tt, {0, 1, 2})) == Rational(1));
    CHECK(relative_density(tt, subset_of(tt, {0, 1, 2, 3, 4, 5})) == Rational(1));

    Graph empty3(3, {});
    CHECK(relative_density(empty3, subset_of(empty3, {0, 1})) == Rational(0));

    CHECK_THROWS_AS(relative_density(g, VertexSubset(4)), std::invalid_argument);
}

TEST_CASE("single cluster editing on fixed graphs") {
    Graph g = k4();
    CHECK(single_cluster_editing(g, subset_of(g, {0, 1})) == Rational(4));

    Graph tt = two_triangles();
    CHECK(single_cluster_editing(tt, subset_of(tt, {0, 1, 2})) == Rational(0));

    Graph h = k33();
    CHECK(single_cluster_editing(h, subset_of(h, {0, 1, 2})) == Rational(12));

    CHECK_THROWS_AS(single_cluster_editing(g, VertexSubset(4)), std::invalid_argument);
}

TEST_CASE("evaluate_measure dispatch and kind names") {
    Graph g = k4();
    VertexSubset s = subset_of(g, {0, 1});
    CHECK(evaluate_measure(MeasureKind::conductance, g, s).value == Rational(2, 3));
    CHECK(evaluate_measure(MeasureKind::editing, g, s).value == Rational(4));
    for (MeasureKind kind : {MeasureKind::conductance, MeasureKind::local_density,
                             MeasureKind::relative_density, MeasureKind::editing}) {
        CHECK(parse_measure_kind(measure_kind_name(kind)) == kind);
    }
    CHECK_FALSE(parse_measure_kind("nope").has_value());
}

TEST_CASE("measure ranges, symmetry and clique characterization") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_graph(rng, n, 50 + static_cast<int>(rng() % 850));
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (mask == 0) {
            mask = 1;
        }
        VertexSubset s = VertexSubset::from_mask(mask, n);

        if (!s.full()) {
            Rational phi = conductance(g, s);
            CHECK(phi >= Rational(0));
            CHECK(phi <= Rational(1));
            CHECK(phi == conductance(g, s.complement()));
        }
        Rational delta = local_density(g, s);
        Rational rho = relative_density(g, s);
        Rational eps = single_cluster_editing(g, s);
        CHECK(delta >= Rational(0));
        CHECK(delta <= Rational(1));
        CHECK(rho >= Rational(0));
        CHECK(rho <= Rational(1));
        CHECK(eps >= Rational(0));
        CHECK(eps.is_integer());

        long long size = s.count();
        bool is_clique = size >= 2 &&
                         induced_edge_count(g, s) == size * (size - 1) / 2;
        CHECK((delta == Rational(1)) == is_clique);
        bool isolated_clique = size >= 2 && is_clique && cut_size(g, s) == 0;
        if (size >= 2) {
            CHECK((eps == Rational(0)) == isolated_clique);
        }
    }
}

TEST_CASE("closed forms for bisections of cubic graphs") {
    // For every bisection S of a cubic graph:
    //   |E(S)|  = (3n - 2c)/4
    //   rho(S)  = (3n - 2c)/(3n + 2c)
    //   eps(S)  = (12c + n(n-8))/8
    for (int n : {4, 6}) {
        for (const Graph& g : all_cubic_graphs(n)) {
            SubsetStream bisections(n, n / 2);
            while (auto mask = bisections.next()) {
                VertexSubset s = VertexSubset::from_mask(*mask, n);
                long long c = cut_size(g, s);
                CHECK(Rational(4 * induced_edge_count(g, s)) == Rational(3 * n - 2 * c));
                CHECK(relative_density(g, s) == Rational(3 * n - 2 * c, 3 * n + 2 * c));
                CHECK(single_cluster_editing(g, s) ==
                      Rational(12 * c + static_cast<long long>(n) * (n - 8), 8));
            }
        }
    }
}
