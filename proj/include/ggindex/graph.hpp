#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggindex {

/// Raised when a graph cannot be constructed: self-loops, out-of-range
/// endpoints, an empty vertex set or a disconnected edge set.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest order for which per-vertex adjacency bit sets are kept.
inline constexpr int kMaxBitsetOrder = 64;

/// Undirected edge with the smaller endpoint first.
struct Edge {
    int u = 0;
    int v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple connected undirected graph on vertices 0..n-1.
///
/// Edges are deduplicated and stored sorted by (smaller, larger) endpoint.
/// Neighbor lists are sorted ascending. For n <= 64 each vertex also carries
/// its neighborhood as a 64-bit mask.
class Graph {
public:
    /// Validates and builds. Duplicate pairs (in either orientation) collapse
    /// to a single edge.
    Graph(int order, std::span<const std::pair<int, int>> edge_list);
    Graph(int order, std::span<const Edge> edge_list);

    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const int> neighbors(int v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const noexcept { return max_degree_; }
    int min_degree() const noexcept { return min_degree_; }

    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const;

    bool has_edge(int u, int v) const;

    /// m - n + 1; the minimum number of edge deletions leaving a tree.
    int cyclomatic_number() const noexcept { return size() - order_ + 1; }

    bool is_tree() const noexcept { return size() == order_ - 1; }

    bool has_bitset_adjacency() const noexcept { return order_ <= kMaxBitsetOrder; }

    /// Neighborhood of v as a bit mask. Requires order() <= 64.
    std::uint64_t adjacency_mask(int v) const;
    std::span<const std::uint64_t> adjacency_masks() const;

    /// Graph with vertex v renamed to permutation[v].
    Graph relabeled(std::span<const int> permutation) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    void build(int order, std::vector<Edge> edges);

    int order_ = 0;
    int max_degree_ = 0;
    int min_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<int> adjacency_;
    std::vector<std::uint64_t> masks_;
};

Graph build_graph(int order, std::span<const std::pair<int, int>> edge_list);

/// Builds a graph from bit-mask adjacency (n <= 64). Symmetry is assumed.
Graph graph_from_masks(std::span<const std::uint64_t> masks);

/// True when every vertex is reachable from vertex 0.
bool is_connected_masks(std::span<const std::uint64_t> masks);

/// Symmetric n x n shortest-path matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int order)
        : order_(order), data_(static_cast<std::size_t>(order) * order, 0)
    {
    }

    int order() const noexcept { return order_; }

    std::uint32_t operator()(int i, int j) const
    {
        return data_[static_cast<std::size_t>(i) * order_ + j];
    }
    std::uint32_t& operator()(int i, int j)
    {
        return data_[static_cast<std::size_t>(i) * order_ + j];
    }

    std::span<const std::uint32_t> row(int i) const
    {
        return {data_.data() + static_cast<std::size_t>(i) * order_, static_cast<std::size_t>(order_)};
    }

    std::uint32_t diameter() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    int order_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Single-source BFS distances.
std::vector<std::uint32_t> bfs_distances(const Graph& g, int source);

DistanceMatrix all_pairs_distances(const Graph& g);

/// Proper 2-coloring (colors 0/1, vertex 0 colored 0) or nullopt when the
/// graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace ggindex
