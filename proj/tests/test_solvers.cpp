#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "clusterfit/cubic.hpp"
#include "clusterfit/measures.hpp"
#include "clusterfit/solvers.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfit;
using namespace testutil;

namespace {

// Unrestricted reference search: scan every admissible mask with no
// symmetry shortcuts and report the optimal value plus the smallest
// optimal mask. `admit` filters masks, `better` orders values.
template <typename Value, typename Admit, typename Eval>
std::pair<Value, std::uint64_t> reference_opt(int n, bool minimize, const Admit& admit,
                                              const Eval& eval) {
    bool have = false;
    Value best{};
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!admit(mask)) {
            continue;
        }
        Value value = eval(mask);
        if (!have || (minimize ? value < best : value > best)) {
            have = true;
            best = value;
            best_mask = mask;
        }
    }
    REQUIRE(have);
    return {best, best_mask};
}

int popcount64(std::uint64_t v) { return std::popcount(v); }

}  // namespace

TEST_CASE("max cut on fixed graphs") {
    CHECK(max_cut(k4()).value == Rational(4));
    CHECK(max_cut(k33()).value == Rational(9));
    CHECK(max_cut(Graph(5, {})).value == Rational(0));
    CHECK(max_cut(k4()).witness == subset_of(k4(), {0, 1}));
    CHECK(max_cut(k4()).explored == 8);
    CHECK_THROWS_AS(max_cut(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("min bisection on fixed graphs") {
    CHECK(min_bisection(k4()).value == Rational(4));
    CHECK(min_bisection(k33()).value == Rational(5));
    CHECK(min_bisection(prism()).value == Rational(3));
    CHECK(min_bisection(prism()).witness == subset_of(prism(), {0, 1, 2}));
    CHECK_THROWS_AS(min_bisection(path3()), std::invalid_argument);  // odd n
}

TEST_CASE("min conductance on fixed graphs") {
    CHECK(min_conductance(k4()).value == Rational(2, 3));
    CHECK(min_conductance(complete_bipartite(4, 4)).value == Rational(1, 2));
    CHECK(min_conductance(two_triangles()).value == Rational(0));
    CHECK(min_conductance(two_triangles()).witness == subset_of(two_triangles(), {0, 1, 2}));

    CHECK(min_conductance(k4()).explored == 7);

    Optimum degenerate = min_conductance(Graph(3, {}));
    CHECK(degenerate.degenerate);
    CHECK(degenerate.value == Rational(0));
    CHECK(degenerate.witness == VertexSubset(3, {0}));

    CHECK_FALSE(min_conductance(k4()).degenerate);
    CHECK_THROWS_AS(min_conductance(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("best density on fixed graphs") {
    CHECK(best_density(k4(), 3, DensityKind::local).value == Rational(1));
    CHECK(best_density(k4(), 2, DensityKind::relative).value == Rational(1, 5));

    Optimum path_best = best_density(path3(), 2, DensityKind::local);
    CHECK(path_best.value == Rational(1));
    CHECK(path_best.witness == subset_of(path3(), {0, 1}));

    CHECK(best_density(k33(), 3, DensityKind::relative).value == Rational(2, 7));
    CHECK(best_density(k4(), 1, DensityKind::local).value == Rational(0));
    CHECK(best_density(k4(), 4, DensityKind::local).value == Rational(1));

    CHECK_THROWS_AS(best_density(k4(), 0, DensityKind::local), std::invalid_argument);
    CHECK_THROWS_AS(best_density(k4(), 5, DensityKind::local), std::invalid_argument);
}

TEST_CASE("min editing on fixed graphs") {
    CHECK(min_editing(k4(), 2).value == Rational(4));
    CHECK(min_editing(two_triangles(), 3).value == Rational(0));
    CHECK(min_editing(k33(), 3).value == Rational(6));
    CHECK_THROWS_AS(min_editing(k4(), 0), std::invalid_argument);
}

TEST_CASE("optimizers agree with the unrestricted reference search") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 100 + static_cast<int>(rng() % 800));

        {
            auto [value, mask] = reference_opt<int>(
                n, false, [](std::uint64_t) { return true; },
                [&](std::uint64_t m) { return matrix_cut_size(g, m); });
            Optimum opt = max_cut(g);
            CHECK(opt.value == Rational(value));
            CHECK(opt.witness.mask() == mask);
        }

        if (g.edge_count() > 0) {
            auto [value, mask] = reference_opt<Rational>(
                n, true,
                [n](std::uint64_t m) { return m != 0 && m != (std::uint64_t{1} << n) - 1; },
                [&](std::uint64_t m) { return conductance(g, VertexSubset::from_mask(m, n)); });
            Optimum opt = min_conductance(g);
            CHECK(opt.value == value);
            CHECK(opt.witness.mask() == mask);
        }

        if (n % 2 == 0) {
            auto [value, mask] = reference_opt<int>(
                n, true, [n](std::uint64_t m) { return popcount64(m) == n / 2; },
                [&](std::uint64_t m) { return matrix_cut_size(g, m); });
            Optimum opt = min_bisection(g);
            CHECK(opt.value == Rational(value));
            CHECK(opt.witness.mask() == mask);
        }

        int k = 1 + static_cast<int>(rng() % n);
        for (DensityKind kind : {DensityKind::local, DensityKind::relative}) {
            auto [value, mask] = reference_opt<Rational>(
                n, false, [k](std::uint64_t m) { return popcount64(m) == k; },
                [&](std::uint64_t m) {
                    VertexSubset s = VertexSubset::from_mask(m, n);
                    return kind == DensityKind::local ? local_density(g, s)
                                                      : relative_density(g, s);
                });
            Optimum opt = best_density(g, k, kind);
            CHECK(opt.value == value);
            CHECK(opt.witness.mask() == mask);
        }

        {
            auto [value, mask] = reference_opt<Rational>(
                n, true, [k](std::uint64_t m) { return popcount64(m) == k; },
                [&](std::uint64_t m) {
                    return single_cluster_editing(g, VertexSubset::from_mask(m, n));
                });
            Optimum opt = min_editing(g, k);
            CHECK(opt.value == value);
            CHECK(opt.witness.mask() == mask);
        }
    }
}

TEST_CASE("bisection cut parity on cubic graphs") {
    std::mt19937_64 rng(61);
    for (int n : {6, 8, 10}) {
        for (int i = 0; i < 10; ++i) {
            Graph g = generate_random_cubic(n, rng());
            for (int j = 0; j < 20; ++j) {
                std::uint64_t mask = 0;
                while (popcount64(mask) != n / 2) {
                    mask = rng() & ((std::uint64_t{1} << n) - 1);
                }
                int c = cut_size(g, VertexSubset::from_mask(mask, n));
                CHECK(c % 2 == (3 * n / 2) % 2);
            }
        }
    }
}

TEST_CASE("decisions") {
    CHECK_FALSE(decide({k4(), ProblemKind::conductance, std::nullopt, Rational(1, 2)}).yes);
    CHECK(decide({k4(), ProblemKind::conductance, std::nullopt, Rational(2, 3)}).yes);

    Decision cut_yes = decide({k33(), ProblemKind::max_cut, std::nullopt, Rational(9)});
    CHECK(cut_yes.yes);
    REQUIRE(cut_yes.witness.has_value());
    CHECK(cut_size(k33(), *cut_yes.witness) == 9);
    CHECK_FALSE(decide({k33(), ProblemKind::max_cut, std::nullopt, Rational(10)}).yes);

    CHECK(decide({k4(), ProblemKind::editing, 2, Rational(4)}).yes);
    CHECK_FALSE(decide({k4(), ProblemKind::editing, 2, Rational(7, 2)}).yes);
    CHECK_FALSE(decide({k4(), ProblemKind::conductance, std::nullopt, Rational(1, 2)})
                    .witness.has_value());

    CHECK(decide({k4(), ProblemKind::min_bisection, std::nullopt, Rational(4)}).yes);
    CHECK(decide({k4(), ProblemKind::relative_density, 2, Rational(1, 5)}).yes);
    CHECK(decide({k4(), ProblemKind::local_density, 3, Rational(1)}).yes);

    CHECK_THROWS_AS(decide({k4(), ProblemKind::editing, std::nullopt, Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("decide agrees with a direct scan over every admissible subset") {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 40; ++i) {
        int n = 4 + 2 * static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, 150 + static_cast<int>(rng() % 700));
        int k = 1 + static_cast<int>(rng() % n);
        Rational threshold(static_cast<long long>(rng() % 21) - 4,
                           1 + static_cast<long long>(rng() % 6));

        auto exists = [&](auto admit, auto satisfied) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (admit(mask) && satisfied(VertexSubset::from_mask(mask, n))) {
                    return true;
                }
            }
            return false;
        };
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        auto proper = [full](std::uint64_t m) { return m != 0 && m != full; };
        auto size_k = [k](std::uint64_t m) { return std::popcount(m) == k; };
        auto size_half = [n](std::uint64_t m) { return std::popcount(m) == n / 2; };

        if (g.edge_count() > 0) {
            CHECK(decide({g, ProblemKind::conductance, std::nullopt, threshold}).yes ==
                  exists(proper, [&](const VertexSubset& s) {
                      return conductance(g, s) <= threshold;
                  }));
        }
        CHECK(decide({g, ProblemKind::local_density, k, threshold}).yes ==
              exists(size_k, [&](const VertexSubset& s) {
                  return local_density(g, s) >= threshold;
              }));
        CHECK(decide({g, ProblemKind::relative_density, k, threshold}).yes ==
              exists(size_k, [&](const VertexSubset& s) {
                  return relative_density(g, s) >= threshold;
              }));
        CHECK(decide({g, ProblemKind::editing, k, threshold}).yes ==
              exists(size_k, [&](const VertexSubset& s) {
                  return single_cluster_editing(g, s) <= threshold;
              }));
        CHECK(decide({g, ProblemKind::max_cut, std::nullopt, threshold}).yes ==
              exists([](std::uint64_t) { return true; },
                     [&](const VertexSubset& s) { return Rational(cut_size(g, s)) >= threshold; }));
        CHECK(decide({g, ProblemKind::min_bisection, std::nullopt, threshold}).yes ==
              exists(size_half, [&](const VertexSubset& s) {
                  return Rational(cut_size(g, s)) <= threshold;
              }));
    }
}

TEST_CASE("optimizers are deterministic across worker counts") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 10; ++i) {
        int n = 6 + 2 * static_cast<int>(rng() % 3);
        Graph g = random_graph(rng, n, 300 + static_cast<int>(rng() % 400));
        for (int workers : {1, 2, 5, 0}) {
            Optimum cut = max_cut(g, workers);
            CHECK(cut.value == max_cut(g).value);
            CHECK(cut.witness == max_cut(g).witness);
            CHECK(cut.explored == max_cut(g).explored);
            if (g.edge_count() > 0) {
                Optimum cond = min_conductance(g, workers);
                CHECK(cond.witness == min_conductance(g).witness);
            }
            Optimum bis = min_bisection(g, workers);
            CHECK(bis.witness == min_bisection(g).witness);
            Optimum den = best_density(g, n / 2, DensityKind::relative, workers);
            CHECK(den.witness == best_density(g, n / 2, DensityKind::relative).witness);
            Optimum ed = min_editing(g, n / 2, workers);
            CHECK(ed.witness == min_editing(g, n / 2).witness);
        }
    }
}

TEST_CASE("local search stays above the true minimum and is deterministic") {
    Optimum ls = local_search_min_conductance(k4(), 5, 4);
    CHECK(ls.value == Rational(2, 3));  // every local optimum of K4 is a 2-subset

    Optimum tt = local_search_min_conductance(two_triangles(), 9, 8);
    CHECK(tt.value == Rational(0));

    std::mt19937_64 rng(71);
    for (int i = 0; i < 25; ++i) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 200 + static_cast<int>(rng() % 600));
        if (g.edge_count() == 0) {
            continue;
        }
        Optimum a = local_search_min_conductance(g, 1234, 6);
        Optimum b = local_search_min_conductance(g, 1234, 6);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.explored == b.explored);
        CHECK(a.value >= min_conductance(g).value);
        CHECK(conductance(g, a.witness) == a.value);
    }

    CHECK_THROWS_AS(local_search_min_conductance(Graph(4, {}), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(local_search_min_conductance(k4(), 1, 0), std::invalid_argument);
}
