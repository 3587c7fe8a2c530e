#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cfit {

// Unordered vertex pair, normalized to first < second on construction.
using Edge = std::pair<int, int>;

// Immutable simple undirected graph over vertices 0..n-1. No self-loops,
// no duplicate edges; the constructor rejects both.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted list of normalized edges.
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    // Same vertices, exactly the missing pairs as edges.
    Graph complement() const;

    // True iff every vertex has degree exactly 3 (forces n even, n >= 4).
    bool is_cubic() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Subset of the vertices of a graph with n vertices. The context size n is
// part of the value; operations mixing a graph with a subset built for a
// different n throw.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int n);
    VertexSubset(int n, std::span<const int> vertices);
    VertexSubset(int n, std::initializer_list<int> vertices);

    // Bitmask constructor/accessor; only valid for n <= 63.
    static VertexSubset from_mask(std::uint64_t mask, int n);
    std::uint64_t mask() const;

    int context_size() const { return n_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool full() const { return count_ == n_; }
    bool contains(int v) const;

    void insert(int v);
    void erase(int v);

    std::vector<int> vertices() const;
    VertexSubset complement() const;

    friend bool operator==(const VertexSubset& a, const VertexSubset& b) = default;

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;

    void check_vertex(int v) const;
};

// Number of edges with exactly one endpoint in s.
int cut_size(const Graph& g, const VertexSubset& s);

// Sum of graph degrees over the vertices of s.
int degree_sum(const Graph& g, const VertexSubset& s);

// Number of edges with both endpoints in s.
int induced_edge_count(const Graph& g, const VertexSubset& s);

// FNV-1a over the canonical structure (n plus the sorted edge list).
std::uint64_t graph_hash(const Graph& g);

}  // namespace cfit
