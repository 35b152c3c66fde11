#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggindex/canonical.hpp"
#include "ggindex/graph.hpp"

namespace ggindex {

/// Structural filters for exhaustive generation.
struct Constraints {
    int n = 1;
    bool bipartite_only = false;
    std::optional<int> max_degree;
    bool trees_only = false;
    /// Exact cyclomatic number m - n + 1.
    std::optional<int> cyclomatic;

    /// Throws std::invalid_argument on inconsistent fields.
    void validate() const;
    std::string describe() const;

    bool admits(const Graph& g) const;
};

/// Largest n the generator accepts, per constraint class.
struct EnumerationLimits {
    int general = 10;
    int bipartite = 11;
    int trees = 14;

    /// Defaults, with GGINDEX_MAX_N (if set) replacing the general bound and
    /// raising the other two when it exceeds them.
    static EnumerationLimits from_environment();

    EnumerationLimits with_general(int bound) const;
    int bound_for(const Constraints& c) const;
};

inline constexpr const char* kMaxOrderEnvironmentVariable = "GGINDEX_MAX_N";

/// Requested n is above the configured feasibility bound.
class EnumerationRefused : public std::runtime_error {
public:
    EnumerationRefused(int requested, int bound, const std::string& what_class);

    int requested() const noexcept { return requested_; }
    int bound() const noexcept { return bound_; }

private:
    int requested_;
    int bound_;
};

struct EnumerationOptions {
    EnumerationLimits limits = EnumerationLimits::from_environment();
    int workers = 1;
};

struct EnumeratedGraph {
    CanonicalForm form;
    /// The canonically relabeled representative.
    Graph graph;
};

/// One representative per isomorphism class, sorted by canonical form.
class GraphStream {
public:
    GraphStream() = default;
    GraphStream(Constraints constraints, std::vector<EnumeratedGraph> items)
        : constraints_(constraints), items_(std::move(items))
    {
    }

    const Constraints& constraints() const noexcept { return constraints_; }
    const std::vector<EnumeratedGraph>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const EnumeratedGraph& operator[](std::size_t i) const { return items_[i]; }

    std::vector<Graph> graphs() const;

private:
    Constraints constraints_;
    std::vector<EnumeratedGraph> items_;
};

/// Connected graphs on c.n vertices satisfying c, one per isomorphism class.
///
/// Vertex augmentation that keeps every intermediate graph connected: a
/// child is accepted only when its new vertex lies in the automorphism orbit
/// of the child's canonical deletion vertex (a non-cut vertex, picked by an
/// invariant and then by canonical position), and its neighbor set is the
/// smallest in its orbit under the parent's automorphism group. Bipartite,
/// degree, tree and cyclomatic constraints are all monotone under deleting a
/// non-cut vertex, so they prune the search directly.
GraphStream enumerate_connected(const Constraints& c, const EnumerationOptions& options = {});

GraphStream enumerate_trees(int n, const EnumerationOptions& options = {});

/// Same classes as enumerate_connected without materializing graphs.
std::size_t count_classes(const Constraints& c, const EnumerationOptions& options = {});

/// One graph6 line per graph, in stream order.
void write_graph6(std::ostream& out, const GraphStream& stream);

}  // namespace ggindex
