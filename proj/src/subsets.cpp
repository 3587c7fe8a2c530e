#include "clusterfit/subsets.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace cfit {

namespace {

// Pascal's triangle up to n = 63; every entry fits in uint64_t.
constexpr auto kBinomial = [] {
    std::array<std::array<std::uint64_t, 64>, 64> table{};
    for (int n = 0; n < 64; ++n) {
        table[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
        }
    }
    return table;
}();

void check_n(int n) {
    if (n < 0 || n > kMaxSubsetVertices) {
        throw std::invalid_argument("subset enumeration requires 0 <= n <= " +
                                    std::to_string(kMaxSubsetVertices) + ", got " +
                                    std::to_string(n));
    }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    check_n(n);
    if (k < 0 || k > n) {
        return 0;
    }
    return kBinomial[n][k];
}

SubsetStream::SubsetStream(int n) : n_(n), total_(0) {
    check_n(n);
    total_ = std::uint64_t{1} << n;
}

SubsetStream::SubsetStream(int n, int k) : n_(n), k_(k), total_(0) {
    check_n(n);
    if (k < 0) {
        throw std::invalid_argument("negative subset cardinality");
    }
    total_ = binomial(n, k);
    current_ = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
}

std::optional<std::uint64_t> SubsetStream::next() {
    if (produced_ == total_) {
        return std::nullopt;
    }
    std::uint64_t out = current_;
    ++produced_;
    if (produced_ < total_) {
        current_ = k_ ? next_combination(current_) : current_ + 1;
    }
    return out;
}

std::uint64_t next_combination(std::uint64_t mask) {
    std::uint64_t lowest = mask & (~mask + 1);
    std::uint64_t ripple = mask + lowest;
    std::uint64_t ones = mask ^ ripple;
    return ripple | ((ones >> 2) / lowest);
}

std::uint64_t combination_at_rank(int n, int k, std::uint64_t rank) {
    if (rank >= binomial(n, k)) {
        throw std::invalid_argument("combination rank out of range");
    }
    // Increasing-mask order is colexicographic: peel off the largest
    // element at each step.
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (kBinomial[c + 1][i] <= rank) {
            ++c;
        }
        mask |= std::uint64_t{1} << c;
        rank -= kBinomial[c][i];
    }
    return mask;
}

}  // namespace cfit
