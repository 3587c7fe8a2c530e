#include "clusterfit/cubic.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace cfit {

namespace {

void check_even_order(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("cubic graphs need an even vertex count >= 4, got " +
                                    std::to_string(n));
    }
}

// Unbiased draw from [0, bound) so the stream does not depend on the
// standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

struct CubicEnumerator {
    int n;
    std::vector<Edge> pairs;               // all candidate pairs, lexicographic
    std::vector<std::vector<int>> remaining;  // remaining[t][v]: pairs >= t incident to v
    std::vector<int> degree;
    std::vector<Edge> chosen;
    const std::function<bool(const Graph&)>& visit;
    bool stopped = false;

    CubicEnumerator(int n, const std::function<bool(const Graph&)>& visit)
        : n(n), degree(static_cast<std::size_t>(n), 0), visit(visit) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        remaining.assign(pairs.size() + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int t = static_cast<int>(pairs.size()) - 1; t >= 0; --t) {
            remaining[t] = remaining[t + 1];
            ++remaining[t][pairs[t].first];
            ++remaining[t][pairs[t].second];
        }
    }

    bool feasible(int t) const {
        for (int v = 0; v < n; ++v) {
            if (degree[v] + remaining[t][v] < 3) {
                return false;
            }
        }
        return true;
    }

    void run(std::size_t t) {
        if (stopped) {
            return;
        }
        if (t == pairs.size()) {
            if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; })) {
                if (!visit(Graph(n, chosen))) {
                    stopped = true;
                }
            }
            return;
        }
        if (!feasible(static_cast<int>(t))) {
            return;
        }
        auto [u, v] = pairs[t];
        // Taking the pair first keeps the emission order lexicographic on
        // the resulting edge sets.
        if (degree[u] < 3 && degree[v] < 3) {
            chosen.push_back(pairs[t]);
            ++degree[u];
            ++degree[v];
            run(t + 1);
            --degree[u];
            --degree[v];
            chosen.pop_back();
        }
        run(t + 1);
    }
};

}  // namespace

Graph generate_random_cubic(int n, std::uint64_t seed) {
    check_even_order(n);
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(3 * n));
    for (int i = 0; i < 3 * n; ++i) {
        stubs[static_cast<std::size_t>(i)] = i / 3;
    }
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = uniform_below(rng, i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            simple = u != v;
            if (simple) {
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        if (!simple) {
            continue;
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            continue;
        }
        return Graph(n, std::move(edges));
    }
    throw std::runtime_error("pairing model failed to produce a simple graph");
}

void for_each_cubic(int n, const std::function<bool(const Graph&)>& visit) {
    check_even_order(n);
    if (n > kMaxEnumerableCubic) {
        throw std::invalid_argument("cubic enumeration is limited to n <= " +
                                    std::to_string(kMaxEnumerableCubic) + ", got " +
                                    std::to_string(n));
    }
    CubicEnumerator enumerator(n, visit);
    enumerator.run(0);
}

std::vector<Graph> all_cubic_graphs(int n) {
    std::vector<Graph> graphs;
    for_each_cubic(n, [&graphs](const Graph& g) {
        graphs.push_back(g);
        return true;
    });
    return graphs;
}

}  // namespace cfit
