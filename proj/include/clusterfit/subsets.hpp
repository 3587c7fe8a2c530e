#pragma once

#include <cstdint>
#include <optional>

namespace cfit {

// Bitmask subsets cap: one machine word with a sign-free bit to spare.
inline constexpr int kMaxSubsetVertices = 63;

// C(n, k) for 0 <= n <= 63; every such value fits in uint64_t.
std::uint64_t binomial(int n, int k);

// Subsets of {0..n-1} as bitmasks in increasing numeric order, optionally
// restricted to a fixed cardinality. Single consumer.
class SubsetStream {
public:
    explicit SubsetStream(int n);
    SubsetStream(int n, int k);

    std::optional<std::uint64_t> next();

    // Total number of subsets the stream yields.
    std::uint64_t size() const { return total_; }

private:
    int n_;
    std::optional<int> k_;
    std::uint64_t total_;
    std::uint64_t produced_ = 0;
    std::uint64_t current_ = 0;
};

// Gosper's hack: smallest k-subset mask greater than mask (same popcount).
std::uint64_t next_combination(std::uint64_t mask);

// rank-th k-subset of {0..n-1} in increasing mask order, rank < C(n,k).
std::uint64_t combination_at_rank(int n, int k, std::uint64_t rank);

}  // namespace cfit
