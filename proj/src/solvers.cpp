#include "clusterfit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "clusterfit/subsets.hpp"

namespace cfit {

namespace {

// Adjacency-bitmask view of a graph with at most 63 vertices; all solver
// hot loops run on this.
struct MaskGraph {
    int n;
    std::uint64_t full;
    int total_degree = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()) {
        if (n < 1 || n > kMaxSolverVertices) {
            throw std::invalid_argument("exhaustive solvers require 1 <= n <= " +
                                        std::to_string(kMaxSolverVertices) + ", got " +
                                        std::to_string(n));
        }
        full = (std::uint64_t{1} << n) - 1;
        adj.assign(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        deg.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            deg[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
            total_degree += deg[static_cast<std::size_t>(v)];
        }
    }

    int cut(std::uint64_t s) const {
        std::uint64_t outside = full & ~s;
        int crossing = 0;
        for (std::uint64_t m = s; m != 0; m &= m - 1) {
            crossing += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & outside);
        }
        return crossing;
    }

    int degree_sum(std::uint64_t s) const {
        int sum = 0;
        for (std::uint64_t m = s; m != 0; m &= m - 1) {
            sum += deg[static_cast<std::size_t>(std::countr_zero(m))];
        }
        return sum;
    }

    int induced(std::uint64_t s) const {
        int twice = 0;
        for (std::uint64_t m = s; m != 0; m &= m - 1) {
            twice += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & s);
        }
        return twice / 2;
    }

    Rational conductance(std::uint64_t s) const {
        int crossing = cut(s);
        if (crossing == 0) {
            return Rational(0);
        }
        int inside = degree_sum(s);
        return Rational(crossing, std::min(inside, total_degree - inside));
    }

    std::uint64_t canonical_side(std::uint64_t s) const { return std::min(s, full & ~s); }
};

// Running optimum with the canonical (smallest-bitmask) witness among ties.
// Merging trackers commutes, so parallel partitioning cannot change the
// result.
struct BestTracker {
    bool minimize;
    bool valid = false;
    Rational value;
    std::uint64_t witness = 0;

    explicit BestTracker(bool minimize) : minimize(minimize) {}

    void offer(const Rational& v, std::uint64_t mask) {
        if (!valid || (minimize ? v < value : v > value)) {
            valid = true;
            value = v;
            witness = mask;
        } else if (v == value && mask < witness) {
            witness = mask;
        }
    }

    void merge(const BestTracker& other) {
        if (other.valid) {
            offer(other.value, other.witness);
        }
    }
};

int resolve_workers(int workers) {
    if (workers < 0) {
        throw std::invalid_argument("negative worker count");
    }
    if (workers == 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(workers, 1);
}

// body(begin, end, tracker) enumerates indices [begin, end) of a solver's
// search space and offers candidates to its tracker.
template <typename Body>
BestTracker parallel_best(std::uint64_t total, int workers, bool minimize, const Body& body) {
    workers = resolve_workers(workers);
    if (static_cast<std::uint64_t>(workers) > total) {
        workers = static_cast<int>(std::max<std::uint64_t>(total, 1));
    }
    std::vector<BestTracker> bests(static_cast<std::size_t>(workers), BestTracker(minimize));
    if (workers == 1) {
        body(0, total, bests[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        std::uint64_t per = total / static_cast<std::uint64_t>(workers);
        std::uint64_t extra = total % static_cast<std::uint64_t>(workers);
        std::uint64_t begin = 0;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t end = begin + per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            threads.emplace_back([&body, &bests, w, begin, end] { body(begin, end, bests[static_cast<std::size_t>(w)]); });
            begin = end;
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    BestTracker result(minimize);
    for (const auto& b : bests) {
        result.merge(b);
    }
    return result;
}

Optimum finish(const Graph& g, const BestTracker& best, std::uint64_t explored) {
    Optimum out;
    out.witness = VertexSubset::from_mask(best.witness, g.vertex_count());
    out.value = best.value;
    out.explored = explored;
    return out;
}

void require_k(const std::optional<int>& k, std::string_view what) {
    if (!k) {
        throw std::invalid_argument(std::string(what) + " needs a cardinality k");
    }
}

}  // namespace

Optimum max_cut(const Graph& g, int workers) {
    MaskGraph mg(g);
    // cut(S) = cut(V \ S): it is enough to scan the sides not containing
    // vertex 0.
    std::uint64_t total = std::uint64_t{1} << (mg.n - 1);
    BestTracker best = parallel_best(total, workers, /*minimize=*/false,
                                     [&mg](std::uint64_t begin, std::uint64_t end, BestTracker& acc) {
                                         for (std::uint64_t i = begin; i < end; ++i) {
                                             std::uint64_t s = i << 1;
                                             acc.offer(Rational(mg.cut(s)), mg.canonical_side(s));
                                         }
                                     });
    return finish(g, best, total);
}

Optimum min_bisection(const Graph& g, int workers) {
    if (g.vertex_count() % 2 != 0) {
        throw std::invalid_argument("bisection needs an even vertex count");
    }
    MaskGraph mg(g);
    if (mg.n < 2) {
        throw std::invalid_argument("bisection needs at least 2 vertices");
    }
    int half = mg.n / 2;
    // Fix vertex 0 inside; enumerate the remaining half-1 members.
    std::uint64_t total = binomial(mg.n - 1, half - 1);
    BestTracker best = parallel_best(
        total, workers, /*minimize=*/true,
        [&mg, half](std::uint64_t begin, std::uint64_t end, BestTracker& acc) {
            if (begin == end) {
                return;
            }
            std::uint64_t rest = combination_at_rank(mg.n - 1, half - 1, begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                std::uint64_t s = (rest << 1) | 1;
                acc.offer(Rational(mg.cut(s)), mg.canonical_side(s));
                if (i + 1 < end) {
                    rest = next_combination(rest);
                }
            }
        });
    return finish(g, best, total);
}

Optimum min_conductance(const Graph& g, int workers) {
    if (g.vertex_count() < 2) {
        throw std::invalid_argument("conductance optimization needs at least 2 vertices");
    }
    MaskGraph mg(g);
    if (g.edge_count() == 0) {
        // Every proper nonempty subset sits at the defined-zero value; the
        // canonical witness is the lowest singleton.
        Optimum out;
        out.witness = VertexSubset(g.vertex_count(), {0});
        out.value = Rational(0);
        out.degenerate = true;
        return out;
    }
    // Conductance is complement-symmetric: scan the sides containing
    // vertex 0, skipping the full set.
    std::uint64_t total = (std::uint64_t{1} << (mg.n - 1)) - 1;
    BestTracker best = parallel_best(total, workers, /*minimize=*/true,
                                     [&mg](std::uint64_t begin, std::uint64_t end, BestTracker& acc) {
                                         for (std::uint64_t i = begin; i < end; ++i) {
                                             std::uint64_t s = (i << 1) | 1;
                                             acc.offer(mg.conductance(s), mg.canonical_side(s));
                                         }
                                     });
    return finish(g, best, total);
}

Optimum best_density(const Graph& g, int k, DensityKind kind, int workers) {
    MaskGraph mg(g);
    if (k < 1 || k > mg.n) {
        throw std::invalid_argument("cardinality k out of range [1," + std::to_string(mg.n) + "]");
    }
    std::uint64_t total = binomial(mg.n, k);
    BestTracker best = parallel_best(
        total, workers, /*minimize=*/false,
        [&mg, k, kind](std::uint64_t begin, std::uint64_t end, BestTracker& acc) {
            if (begin == end) {
                return;
            }
            std::uint64_t s = combination_at_rank(mg.n, k, begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                Rational value;
                if (kind == DensityKind::local) {
                    value = k == 1 ? Rational(0)
                                   : Rational(2LL * mg.induced(s),
                                              static_cast<long long>(k) * (k - 1));
                } else {
                    int inside = mg.induced(s);
                    int crossing = mg.cut(s);
                    value = inside + crossing == 0 ? Rational(0)
                                                   : Rational(inside, inside + crossing);
                }
                acc.offer(value, s);
                if (i + 1 < end) {
                    s = next_combination(s);
                }
            }
        });
    return finish(g, best, total);
}

Optimum min_editing(const Graph& g, int k, int workers) {
    MaskGraph mg(g);
    if (k < 1 || k > mg.n) {
        throw std::invalid_argument("cardinality k out of range [1," + std::to_string(mg.n) + "]");
    }
    long long clique_edges = static_cast<long long>(k) * (k - 1) / 2;
    std::uint64_t total = binomial(mg.n, k);
    BestTracker best = parallel_best(
        total, workers, /*minimize=*/true,
        [&mg, k, clique_edges](std::uint64_t begin, std::uint64_t end, BestTracker& acc) {
            if (begin == end) {
                return;
            }
            std::uint64_t s = combination_at_rank(mg.n, k, begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                acc.offer(Rational(clique_edges - mg.induced(s) + mg.cut(s)), s);
                if (i + 1 < end) {
                    s = next_combination(s);
                }
            }
        });
    return finish(g, best, total);
}

Decision decide(const DecisionInstance& inst, int workers) {
    Optimum opt;
    bool yes = false;
    switch (inst.kind) {
        case ProblemKind::conductance:
            opt = min_conductance(inst.graph, workers);
            yes = opt.value <= inst.threshold;
            break;
        case ProblemKind::local_density:
            require_k(inst.k, "local density decision");
            opt = best_density(inst.graph, *inst.k, DensityKind::local, workers);
            yes = opt.value >= inst.threshold;
            break;
        case ProblemKind::relative_density:
            require_k(inst.k, "relative density decision");
            opt = best_density(inst.graph, *inst.k, DensityKind::relative, workers);
            yes = opt.value >= inst.threshold;
            break;
        case ProblemKind::editing:
            require_k(inst.k, "editing decision");
            opt = min_editing(inst.graph, *inst.k, workers);
            yes = opt.value <= inst.threshold;
            break;
        case ProblemKind::max_cut:
            opt = max_cut(inst.graph, workers);
            yes = opt.value >= inst.threshold;
            break;
        case ProblemKind::min_bisection:
            opt = min_bisection(inst.graph, workers);
            yes = opt.value <= inst.threshold;
            break;
    }
    Decision out;
    out.yes = yes;
    out.optimum = opt.value;
    if (yes) {
        out.witness = opt.witness;
    }
    return out;
}

Optimum local_search_min_conductance(const Graph& g, std::uint64_t seed, int restarts) {
    int n = g.vertex_count();
    if (n < 2) {
        throw std::invalid_argument("local search needs at least 2 vertices");
    }
    if (g.edge_count() == 0) {
        throw std::invalid_argument("local search needs at least one edge");
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be positive");
    }

    std::mt19937_64 rng(seed);
    Optimum best;
    bool have_best = false;
    std::uint64_t explored = 0;

    for (int round = 0; round < restarts; ++round) {
        VertexSubset current(n);
        do {
            current = VertexSubset(n);
            for (int v = 0; v < n; ++v) {
                if (rng() & 1) {
                    current.insert(v);
                }
            }
        } while (current.empty() || current.full());

        Rational value = conductance(g, current);
        ++explored;

        for (;;) {
            int move = -1;
            Rational move_value = value;
            for (int v = 0; v < n; ++v) {
                VertexSubset candidate = current;
                if (candidate.contains(v)) {
                    candidate.erase(v);
                } else {
                    candidate.insert(v);
                }
                if (candidate.empty() || candidate.full()) {
                    continue;
                }
                Rational cand_value = conductance(g, candidate);
                ++explored;
                if (cand_value < move_value) {
                    move_value = cand_value;
                    move = v;
                }
            }
            if (move < 0) {
                break;
            }
            if (current.contains(move)) {
                current.erase(move);
            } else {
                current.insert(move);
            }
            value = move_value;
        }

        if (!have_best || value < best.value) {
            have_best = true;
            best.witness = current;
            best.value = value;
        }
    }
    best.explored = explored;
    return best;
}

std::string_view problem_kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::conductance: return "conductance";
        case ProblemKind::local_density: return "local-density";
        case ProblemKind::relative_density: return "relative-density";
        case ProblemKind::editing: return "editing";
        case ProblemKind::max_cut: return "max-cut";
        case ProblemKind::min_bisection: return "min-bisection";
    }
    return "?";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
    if (name == "conductance") return ProblemKind::conductance;
    if (name == "local-density") return ProblemKind::local_density;
    if (name == "relative-density") return ProblemKind::relative_density;
    if (name == "editing") return ProblemKind::editing;
    if (name == "max-cut") return ProblemKind::max_cut;
    if (name == "min-bisection") return ProblemKind::min_bisection;
    return std::nullopt;
}

}  // namespace cfit
