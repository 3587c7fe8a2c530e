#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clusterfit/graph.hpp"

namespace cfit {

// Random simple cubic graph on n vertices (n even, n >= 4) via the
// pairing model: match 3 stubs per vertex, reject pairings with loops or
// repeated edges and redraw. Deterministic for a fixed seed.
Graph generate_random_cubic(int n, std::uint64_t seed);

// Exhaustive enumeration guard: the labeled counts are 1, 70 and 19355 for
// n = 4, 6, 8; beyond that the stream stops being a desk-scale object.
inline constexpr int kMaxEnumerableCubic = 8;

// Visits every labeled simple cubic graph on n vertices (n in {4,6,8})
// exactly once, in lexicographic edge-set order. Return false to stop.
void for_each_cubic(int n, const std::function<bool(const Graph&)>& visit);

std::vector<Graph> all_cubic_graphs(int n);

}  // namespace cfit
