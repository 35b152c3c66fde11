#include "ggindex/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace ggindex {

namespace {

std::vector<Edge> normalize_edges(std::span<const std::pair<int, int>> edge_list)
{
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        edges.push_back({a, b});
    }
    return edges;
}

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

}  // namespace

Graph::Graph(int order, std::span<const std::pair<int, int>> edge_list)
{
    build(order, normalize_edges(edge_list));
}

Graph::Graph(int order, std::span<const Edge> edge_list)
{
    build(order, {edge_list.begin(), edge_list.end()});
}

void Graph::build(int order, std::vector<Edge> edges)
{
    if (order < 1) {
        throw GraphError("graph must have at least one vertex");
    }
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 0.." + std::to_string(order - 1));
        }
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    order_ = order;
    edges_ = std::move(edges);

    offsets_.assign(order_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (int v = 0; v < order_; ++v) {
        offsets_[v + 1] += offsets_[v];
    }
    adjacency_.resize(offsets_[order_]);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < order_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }

    max_degree_ = 0;
    min_degree_ = std::numeric_limits<int>::max();
    for (int v = 0; v < order_; ++v) {
        max_degree_ = std::max(max_degree_, degree(v));
        min_degree_ = std::min(min_degree_, degree(v));
    }

    if (order_ <= kMaxBitsetOrder) {
        masks_.assign(order_, 0);
        for (const auto& e : edges_) {
            masks_[e.u] |= std::uint64_t{1} << e.v;
            masks_[e.v] |= std::uint64_t{1} << e.u;
        }
    }

    // Connectivity: BFS from 0 over the CSR lists.
    std::vector<char> seen(order_, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int>(queue.size()) != order_) {
        throw GraphError("graph is disconnected: only " + std::to_string(queue.size()) + " of " +
                         std::to_string(order_) + " vertices reachable from vertex 0");
    }
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> seq(order_);
    for (int v = 0; v < order_; ++v) {
        seq[v] = degree(v);
    }
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

bool Graph::has_edge(int u, int v) const
{
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
        return false;
    }
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::uint64_t Graph::adjacency_mask(int v) const
{
    if (!has_bitset_adjacency()) {
        throw GraphError("bit-set adjacency requires at most 64 vertices");
    }
    return masks_[v];
}

std::span<const std::uint64_t> Graph::adjacency_masks() const
{
    if (!has_bitset_adjacency()) {
        throw GraphError("bit-set adjacency requires at most 64 vertices");
    }
    return masks_;
}

Graph Graph::relabeled(std::span<const int> permutation) const
{
    if (static_cast<int>(permutation.size()) != order_) {
        throw GraphError("permutation length does not match graph order");
    }
    std::vector<char> hit(order_, 0);
    for (int p : permutation) {
        if (p < 0 || p >= order_ || hit[p]) {
            throw GraphError("relabeling is not a permutation");
        }
        hit[p] = 1;
    }
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const auto& e : edges_) {
        mapped.push_back({permutation[e.u], permutation[e.v]});
    }
    return Graph(order_, std::span<const Edge>(mapped));
}

Graph build_graph(int order, std::span<const std::pair<int, int>> edge_list)
{
    return Graph(order, edge_list);
}

Graph graph_from_masks(std::span<const std::uint64_t> masks)
{
    const int n = static_cast<int>(masks.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        std::uint64_t higher = masks[u] & ~((std::uint64_t{2} << u) - 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::span<const Edge>(edges));
}

bool is_connected_masks(std::span<const std::uint64_t> masks)
{
    const int n = static_cast<int>(masks.size());
    if (n == 0) {
        return false;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= masks[v];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == all;
}

std::uint32_t DistanceMatrix::diameter() const
{
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, int source)
{
    std::vector<std::uint32_t> dist(g.order(), kUnreached);
    std::vector<int> queue;
    queue.reserve(g.order());
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g)
{
    DistanceMatrix d(g.order());
    for (int s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, s);
        for (int t = 0; t < g.order(); ++t) {
            d(s, t) = row[t];
        }
    }
    return d;
}

std::optional<std::vector<int>> two_coloring(const Graph& g)
{
    std::vector<int> color(g.order(), -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g)
{
    return two_coloring(g).has_value();
}

}  // namespace ggindex
