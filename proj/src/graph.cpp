#include "clusterfit/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cfit {

namespace {

[[noreturn]] void bad(const std::string& message) {
    throw std::invalid_argument(message);
}

void require_same_context(const Graph& g, const VertexSubset& s) {
    if (s.context_size() != g.vertex_count()) {
        bad("subset context " + std::to_string(s.context_size()) +
            " does not match graph on " + std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) {
        bad("negative vertex count");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            bad("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (u < 0 || v >= n_) {
            bad("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        bad("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.resize(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) {
        bad("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) {
        return false;
    }
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= n_) {
        bad("vertex " + std::to_string(v) + " out of range");
    }
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::complement() const {
    std::vector<Edge> missing;
    missing.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) {
                missing.emplace_back(u, v);
            }
        }
    }
    return Graph(n_, std::move(missing));
}

bool Graph::is_cubic() const {
    if (n_ == 0) {
        return false;
    }
    return std::all_of(adj_.begin(), adj_.end(),
                       [](const std::vector<int>& nbrs) { return nbrs.size() == 3; });
}

VertexSubset::VertexSubset(int n) : n_(n) {
    if (n < 0) {
        bad("negative subset context");
    }
    words_.resize((static_cast<std::size_t>(n) + 63) / 64, 0);
}

VertexSubset::VertexSubset(int n, std::span<const int> vertices) : VertexSubset(n) {
    for (int v : vertices) {
        insert(v);
    }
}

VertexSubset::VertexSubset(int n, std::initializer_list<int> vertices)
    : VertexSubset(n, std::span<const int>(vertices.begin(), vertices.size())) {}

VertexSubset VertexSubset::from_mask(std::uint64_t mask, int n) {
    if (n < 0 || n > 63) {
        bad("bitmask subsets require 0 <= n <= 63");
    }
    if (n < 64 && (mask >> n) != 0) {
        bad("mask has bits outside the vertex range");
    }
    VertexSubset s(n);
    if (!s.words_.empty()) {
        s.words_[0] = mask;
    }
    s.count_ = std::popcount(mask);
    return s;
}

std::uint64_t VertexSubset::mask() const {
    if (n_ > 63) {
        bad("subset context too large for a 64-bit mask");
    }
    return words_.empty() ? 0 : words_[0];
}

bool VertexSubset::contains(int v) const {
    check_vertex(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

void VertexSubset::insert(int v) {
    check_vertex(v);
    std::uint64_t& word = words_[static_cast<std::size_t>(v) / 64];
    std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (!(word & bit)) {
        word |= bit;
        ++count_;
    }
}

void VertexSubset::erase(int v) {
    check_vertex(v);
    std::uint64_t& word = words_[static_cast<std::size_t>(v) / 64];
    std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (word & bit) {
        word &= ~bit;
        --count_;
    }
}

std::vector<int> VertexSubset::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word != 0) {
            int bit = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64) + bit);
            word &= word - 1;
        }
    }
    return out;
}

VertexSubset VertexSubset::complement() const {
    VertexSubset out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] = ~words_[w];
    }
    if (n_ % 64 != 0 && !out.words_.empty()) {
        out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    out.count_ = n_ - count_;
    return out;
}

void VertexSubset::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        bad("vertex " + std::to_string(v) + " outside subset context [0," +
            std::to_string(n_) + ")");
    }
}

int cut_size(const Graph& g, const VertexSubset& s) {
    require_same_context(g, s);
    int crossing = 0;
    for (const auto& [u, v] : g.edges()) {
        crossing += s.contains(u) != s.contains(v);
    }
    return crossing;
}

int degree_sum(const Graph& g, const VertexSubset& s) {
    require_same_context(g, s);
    int sum = 0;
    for (int v : s.vertices()) {
        sum += g.degree(v);
    }
    return sum;
}

int induced_edge_count(const Graph& g, const VertexSubset& s) {
    require_same_context(g, s);
    int inside = 0;
    for (const auto& [u, v] : g.edges()) {
        inside += s.contains(u) && s.contains(v);
    }
    return inside;
}

std::uint64_t graph_hash(const Graph& g) {
    constexpr std::uint64_t kOffset = 1469598103934665603ull;
    constexpr std::uint64_t kPrime = 1099511628211ull;
    std::uint64_t h = kOffset;
    auto mix = [&h](std::uint64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (value >> (byte * 8)) & 0xff;
            h *= kPrime;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    mix(static_cast<std::uint64_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) {
        mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
    }
    return h;
}

}  // namespace cfit
