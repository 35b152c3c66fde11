#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ggindex/graph.hpp"

namespace ggindex {

/// Isomorphism-class key: the graph6 string of the canonically relabeled
/// graph. Equal keys if and only if the graphs are isomorphic. Keys are
/// totally ordered by byte comparison.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string key) : key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }
    const std::string& graph6() const noexcept { return key_; }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

private:
    std::string key_;
};

/// Result of a canonical labeling search.
struct CanonicalLabeling {
    /// position[v] is the canonical index of vertex v.
    std::vector<int> position;
    /// vertex_at[i] is the vertex placed at canonical index i.
    std::vector<int> vertex_at;
    /// Canonical adjacency: bit j of rows[i] set iff canonical i ~ j.
    std::vector<std::uint64_t> rows;
    /// Smallest vertex of each vertex's automorphism orbit.
    std::vector<int> orbit;
    /// Automorphisms found during the search (they generate the group).
    std::vector<std::vector<int>> generators;
    /// Leaves of the search tree that were actually visited.
    std::size_t leaves_visited = 0;
};

/// Canonical labeling of a graph given by adjacency masks (n <= 64).
///
/// Partition refinement by neighbor counts, then backtracking over
/// individualizations with orbit pruning from discovered automorphisms. The
/// optional vertex colors give the initial ordered partition (colors sorted
/// ascending); isomorphisms must then preserve colors. Connectivity is not
/// required.
CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> masks,
                                     std::span<const int> colors = {});

CanonicalForm canonical_form_of_masks(std::span<const std::uint64_t> masks);

/// Throws GraphError when the graph has more than 64 vertices.
CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace ggindex
